use super::cube::{self, Point};
use super::FnError;
use std::collections::BTreeMap;

/// Largest arity for which explicit truth tables are materialized.
pub const MAX_TABLE_ARITY: usize = 24;

/// Which inputs a function is defined on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    All,
    /// Inputs of Hamming weight at most `k`.
    MaxWeight(usize),
    /// An explicit (sorted) point set.
    Explicit,
}

/// Provenance tag recorded alongside a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    Or,
    And,
    Maj,
    Parity,
    Const,
    Composed,
    Surj,
    Table,
}

/// A `±1`-valued function on (a subset of) the hypercube.
///
/// Values are stored for exactly the points of the domain, in ascending
/// point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    arity: usize,
    domain: Domain,
    points: Vec<Point>,
    values: Vec<i8>,
    structure: Structure,
}

impl BooleanFunction {
    /// Tabulates `f` on the points selected by `domain`.
    pub fn from_fn(
        arity: usize,
        domain: Domain,
        structure: Structure,
        f: impl Fn(Point) -> i8,
    ) -> Result<Self, FnError> {
        check_arity(arity)?;
        let points = match domain {
            Domain::All => (0..1u64 << arity).collect(),
            Domain::MaxWeight(k) => cube::points_up_to_weight(arity, k),
            Domain::Explicit => {
                return Err(FnError::Malformed(
                    "explicit domains need a point list; use from_points".into(),
                ))
            }
        };
        let values = points.iter().map(|&x| f(x)).collect::<Vec<_>>();
        Self::assemble(arity, domain, points, values, structure)
    }

    /// Tabulates `f` on an explicit point set.
    pub fn from_points(
        arity: usize,
        points: impl IntoIterator<Item = Point>,
        structure: Structure,
        f: impl Fn(Point) -> i8,
    ) -> Result<Self, FnError> {
        check_arity(arity)?;
        let mut pts: Vec<Point> = points.into_iter().collect();
        pts.sort_unstable();
        pts.dedup();
        let values = pts.iter().map(|&x| f(x)).collect::<Vec<_>>();
        Self::assemble(arity, Domain::Explicit, pts, values, structure)
    }

    /// Builds a function from an explicit table; the domain is inferred
    /// (`All` if the table covers the cube).
    pub fn from_table(arity: usize, table: &BTreeMap<Point, i8>) -> Result<Self, FnError> {
        check_arity(arity)?;
        let domain = if table.len() as u64 == 1u64 << arity {
            Domain::All
        } else {
            Domain::Explicit
        };
        let points = table.keys().copied().collect();
        let values = table.values().copied().collect();
        Self::assemble(arity, domain, points, values, Structure::Table)
    }

    fn assemble(
        arity: usize,
        domain: Domain,
        points: Vec<Point>,
        values: Vec<i8>,
        structure: Structure,
    ) -> Result<Self, FnError> {
        let mask = cube::full_mask(arity);
        for (&x, &v) in points.iter().zip(&values) {
            if x & !mask != 0 {
                return Err(FnError::PointOutOfRange { point: x, arity });
            }
            if v != 1 && v != -1 {
                return Err(FnError::NotBoolean(v as i64));
            }
        }
        Ok(Self {
            arity,
            domain,
            points,
            values,
            structure,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn with_structure(mut self, s: Structure) -> Self {
        self.structure = s;
        self
    }

    pub fn is_total(&self) -> bool {
        self.points.len() as u64 == 1u64 << self.arity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, i8)> + '_ {
        self.points.iter().copied().zip(self.values.iter().copied())
    }

    /// Value at `x`, or `None` outside the domain.
    pub fn get(&self, x: Point) -> Option<i8> {
        if self.is_total() {
            return self.values.get(x as usize).copied();
        }
        self.points
            .binary_search(&x)
            .ok()
            .map(|i| self.values[i])
    }

    /// Value at `x`; panics outside the domain.
    pub fn eval(&self, x: Point) -> i8 {
        self.get(x)
            .unwrap_or_else(|| panic!("point {x:#b} outside the function's domain"))
    }

    pub fn contains(&self, x: Point) -> bool {
        self.get(x).is_some()
    }

    pub fn negate(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| -v).collect(),
            ..self.clone()
        }
    }

    /// Same function with its domain cut down to weight `≤ k`.
    pub fn restrict_max_weight(&self, k: usize) -> Self {
        let (points, values) = self
            .iter()
            .filter(|(x, _)| cube::weight(*x) <= k)
            .unzip();
        let domain = match self.domain {
            Domain::All | Domain::MaxWeight(_) => Domain::MaxWeight(k),
            Domain::Explicit => Domain::Explicit,
        };
        Self {
            arity: self.arity,
            domain,
            points,
            values,
            structure: self.structure,
        }
    }

    pub fn preimage(&self, v: i8) -> impl Iterator<Item = Point> + '_ {
        self.iter().filter(move |&(_, fx)| fx == v).map(|(x, _)| x)
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

fn check_arity(arity: usize) -> Result<(), FnError> {
    if arity > MAX_TABLE_ARITY {
        return Err(FnError::ArityTooLarge {
            arity,
            cap: MAX_TABLE_ARITY,
        });
    }
    Ok(())
}
