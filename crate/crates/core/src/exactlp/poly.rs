//! Multilinear polynomials over `{-1,1}^n` with exact coefficients.

use crate::fncore::cube::{self, Point};
use crate::rational::{self, Q};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients keyed by monomial mask; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultilinearPolynomial {
    arity: usize,
    coeffs: BTreeMap<Point, Q>,
}

impl MultilinearPolynomial {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Q) -> Self {
        Self::monomial(arity, 0, c)
    }

    pub fn monomial(arity: usize, mask: Point, c: Q) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(mask, c);
        p
    }

    /// The coordinate `x_i` (0-based).
    pub fn var(arity: usize, i: usize) -> Self {
        Self::monomial(arity, 1 << i, Q::one())
    }

    pub fn from_coeffs(arity: usize, coeffs: impl IntoIterator<Item = (Point, Q)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in coeffs {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, mask: Point, c: Q) {
        debug_assert_eq!(mask & !cube::full_mask(self.arity), 0);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeff(&self, mask: Point) -> Q {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Point, &Q)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(|&m| cube::weight(m)).max().unwrap_or(0)
    }

    pub fn eval(&self, x: Point) -> Q {
        self.coeffs
            .iter()
            .fold(Q::zero(), |acc, (&m, c)| {
                if cube::chi(m, x) > 0 {
                    acc + c
                } else {
                    acc - c
                }
            })
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::from_coeffs(self.arity, self.terms().map(|(m, c)| (m, c * s)))
    }

    /// Re-indexes variables: `x_i` becomes `x_{map(i)}` in a polynomial of
    /// the given arity. Colliding variables multiply (and cancel as squares).
    pub fn relabel(&self, arity: usize, map: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(arity);
        for (m, c) in self.terms() {
            let mask = (0..self.arity)
                .filter(|i| (m >> i) & 1 == 1)
                .fold(0, |acc, i| acc ^ (1 << map(i)));
            out.add_term(mask, c.clone());
        }
        out
    }

    /// Largest absolute pointwise error against `target` over `points`.
    pub fn max_error(&self, points: impl IntoIterator<Item = (Point, i8)>) -> Q {
        points
            .into_iter()
            .map(|(x, v)| rational::abs(&(self.eval(x) - Q::from_integer(v.into()))))
            .max()
            .unwrap_or_else(Q::zero)
    }
}

impl Add for &MultilinearPolynomial {
    type Output = MultilinearPolynomial;
    fn add(self, rhs: Self) -> MultilinearPolynomial {
        let mut out = self.clone();
        out.arity = out.arity.max(rhs.arity);
        for (m, c) in rhs.terms() {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub for &MultilinearPolynomial {
    type Output = MultilinearPolynomial;
    fn sub(self, rhs: Self) -> MultilinearPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &MultilinearPolynomial {
    type Output = MultilinearPolynomial;
    fn neg(self) -> MultilinearPolynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &MultilinearPolynomial {
    type Output = MultilinearPolynomial;
    /// Product reduced with `x_i^2 = 1`.
    fn mul(self, rhs: Self) -> MultilinearPolynomial {
        let mut out = MultilinearPolynomial::zero(self.arity.max(rhs.arity));
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a ^ b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultilinearPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rational::Canon(c))?;
            for i in 0..self.arity {
                if (m >> i) & 1 == 1 {
                    write!(f, "*x{}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    monomial: Vec<usize>,
    #[serde(with = "crate::rational::serde_q")]
    c: Q,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MultilinearPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            n: self.arity,
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    monomial: (0..self.arity).filter(|i| (m >> i) & 1 == 1).collect(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultilinearPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut p = Self::zero(raw.n);
        for t in raw.terms {
            if let Some(&bad) = t.monomial.iter().find(|&&i| i >= raw.n) {
                return Err(serde::de::Error::custom(format!(
                    "monomial variable {bad} beyond arity {}",
                    raw.n
                )));
            }
            p.add_term(t.monomial.iter().fold(0, |m, &i| m | (1 << i)), t.c);
        }
        Ok(p)
    }
}
