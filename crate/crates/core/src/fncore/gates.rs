//! The basic gate set and the combinators built from it.

use super::cube::{self, Point};
use super::function::{BooleanFunction, Domain, Structure};
use super::FnError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Or,
    And,
    /// Majority; even arities break ties toward `+1` (FALSE).
    Maj,
    Parity,
    Const(i8),
}

/// `OR`, `AND`, `MAJ`, `PARITY` or a constant on `n` inputs.
pub fn make_basic(kind: Gate, n: usize) -> Result<BooleanFunction, FnError> {
    if n == 0 && !matches!(kind, Gate::Const(_)) {
        return Err(FnError::ZeroArity);
    }
    let full = cube::full_mask(n);
    let (structure, f): (Structure, Box<dyn Fn(Point) -> i8>) = match kind {
        Gate::Or => (Structure::Or, Box::new(|x| if x != 0 { -1 } else { 1 })),
        Gate::And => (
            Structure::And,
            Box::new(move |x| if x == full { -1 } else { 1 }),
        ),
        Gate::Maj => (
            Structure::Maj,
            Box::new(move |x| if 2 * cube::weight(x) > n { -1 } else { 1 }),
        ),
        Gate::Parity => (Structure::Parity, Box::new(|x| cube::chi(x, x))),
        Gate::Const(v) => {
            if v != 1 && v != -1 {
                return Err(FnError::NotBoolean(v as i64));
            }
            (Structure::Const, Box::new(move |_| v))
        }
    };
    BooleanFunction::from_fn(n, Domain::All, structure, f)
}

/// Evaluates `f` on the outputs of `g` applied to consecutive `m`-bit blocks.
pub(crate) fn outer_input(x: Point, blocks: usize, m: usize, g: impl Fn(Point) -> i8) -> Point {
    let block_mask = cube::full_mask(m);
    (0..blocks).fold(0, |acc, i| {
        if g((x >> (i * m)) & block_mask) < 0 {
            acc | (1 << i)
        } else {
            acc
        }
    })
}

/// Block composition `(f ∘ g)(x_1..x_M) = f(g(x_1), .., g(x_M))`.
pub fn block_compose(f: &BooleanFunction, g: &BooleanFunction) -> Result<BooleanFunction, FnError> {
    if !f.is_total() || !g.is_total() {
        return Err(FnError::PartialInput("block_compose"));
    }
    let (big_m, m) = (f.arity(), g.arity());
    BooleanFunction::from_fn(big_m * m, Domain::All, Structure::Composed, |x| {
        f.eval(outer_input(x, big_m, m, |b| g.eval(b)))
    })
}

/// `SURJ_{N,R}`: `N` blocks of `log R` bits, each naming a range item in
/// `[R]`; outputs `-1` iff every item occurs.
pub fn surjectivity(n_len: usize, range: usize) -> Result<BooleanFunction, FnError> {
    if range < 2 || !range.is_power_of_two() {
        return Err(FnError::RangeNotPowerOfTwo(range));
    }
    if n_len < range {
        return Err(FnError::Malformed(format!(
            "SURJ needs N >= R (got N={n_len}, R={range})"
        )));
    }
    let bits = range.trailing_zeros() as usize;
    let block_mask = cube::full_mask(bits);
    BooleanFunction::from_fn(n_len * bits, Domain::All, Structure::Surj, |x| {
        let mut seen = 0u64;
        for j in 0..n_len {
            seen |= 1 << ((x >> (j * bits)) & block_mask);
        }
        if seen == cube::full_mask(range) {
            -1
        } else {
            1
        }
    })
}

/// Decodes the `j`-th SURJ block into a range item in `1..=R`.
pub fn surj_item(x: Point, j: usize, range: usize) -> usize {
    let bits = range.trailing_zeros() as usize;
    ((x >> (j * bits)) & cube::full_mask(bits)) as usize + 1
}
