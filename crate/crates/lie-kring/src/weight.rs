//! Weight vectors with exact rational coordinates, and linear maps between
//! weight spaces.
//!
//! A `WeightVector` is a point of the (real form of the) weight space of a
//! maximal torus, written in a fixed orthonormal coordinate system.  All
//! coordinates are `BigRational`, so reflections, projections and pairings
//! are exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::Rational;

/// A vector in a fixed-dimensional rational weight space.
///
/// Ordering is lexicographic on coordinates; this is the order used for
/// canonical serialization of characters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    coords: Vec<Rational>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        WeightVector {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// Vector with the given integer coordinates.
    pub fn integers(vals: &[i64]) -> Self {
        WeightVector {
            coords: vals.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        }
    }

    /// Vector with coordinates given as `(numerator, denominator)` pairs.
    pub fn rationals(vals: &[(i64, i64)]) -> Self {
        WeightVector {
            coords: vals
                .iter()
                .map(|&(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Standard inner product `sum_i a_i b_i`.
    pub fn dot(&self, other: &WeightVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "inner product needs equal dimensions");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scaled(&self, k: &Rational) -> WeightVector {
        WeightVector {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// `self + k * other`, exact.
    pub fn add_scaled(&self, k: &Rational, other: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), other.dim());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + k * b)
                .collect(),
        }
    }

    /// Sum of all coordinates (used e.g. for lattice-kernel diagnostics).
    pub fn coord_sum(&self) -> Rational {
        self.coords.iter().sum()
    }

    /// True if every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Multiset of absolute coordinate values in descending order.
    pub fn abs_sorted(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.coords.iter().map(|c| c.abs()).collect();
        v.sort();
        v.reverse();
        v
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), rhs.dim());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.dim(), rhs.dim());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for WeightVector {
    type Err = String;

    /// Parses the `Display` form `(c1,c2,...,cn)` with rational coordinates.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("weight vector must be parenthesized: {s:?}"))?;
        if inner.trim().is_empty() {
            return Ok(WeightVector::new(Vec::new()));
        }
        let coords = inner
            .split(',')
            .map(|part| {
                BigRational::from_str(part.trim())
                    .map_err(|e| format!("bad coordinate {part:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WeightVector::new(coords))
    }
}

/// An exact linear map between weight spaces, given by its matrix rows.
///
/// Applying the map sends a source-space vector to the vector of row
/// pairings; weights that collide in the target are summed by the caller
/// (see `FormalCharacter::project`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    rows: Vec<WeightVector>,
    source_dim: usize,
}

impl WeightMap {
    pub fn new(rows: Vec<WeightVector>) -> Self {
        assert!(!rows.is_empty(), "weight map needs at least one row");
        let source_dim = rows[0].dim();
        assert!(rows.iter().all(|r| r.dim() == source_dim));
        WeightMap { rows, source_dim }
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        WeightMap::new(rows.iter().map(|r| WeightVector::integers(r)).collect())
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut coords = vec![Rational::zero(); dim];
                coords[i] = Rational::from_integer(1.into());
                WeightVector::new(coords)
            })
            .collect();
        WeightMap::new(rows)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, w: &WeightVector) -> WeightVector {
        assert_eq!(w.dim(), self.source_dim, "weight map applied to wrong dimension");
        WeightVector::new(self.rows.iter().map(|r| r.dot(w)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = WeightVector::rationals(&[(1, 2), (-1, 3)]);
        let b = WeightVector::rationals(&[(1, 2), (1, 3)]);
        assert_eq!(&a + &b, WeightVector::integers(&[1, 0]));
        assert_eq!(&a - &b, WeightVector::rationals(&[(0, 1), (-2, 3)]));
        assert_eq!(a.dot(&b), rat(1, 4) - rat(1, 9));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let w = WeightVector::rationals(&[(3, 2), (-1, 2), (0, 1), (-1, 6)]);
        assert_eq!(w.to_string(), "(3/2,-1/2,0,-1/6)");
        let back: WeightVector = w.to_string().parse().unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn lexicographic_order_is_by_value() {
        let a = WeightVector::rationals(&[(1, 2), (5, 1)]);
        let b = WeightVector::integers(&[1, -9]);
        assert!(a < b);
    }

    #[test]
    fn weight_map_applies_rows() {
        // (c1,...,c8) -> (c1,...,c5, 2(c6+c7+c8))
        let mut rows: Vec<&[i64]> = Vec::new();
        rows.push(&[1, 0, 0, 0, 0, 0, 0, 0]);
        rows.push(&[0, 1, 0, 0, 0, 0, 0, 0]);
        rows.push(&[0, 0, 1, 0, 0, 0, 0, 0]);
        rows.push(&[0, 0, 0, 1, 0, 0, 0, 0]);
        rows.push(&[0, 0, 0, 0, 1, 0, 0, 0]);
        rows.push(&[0, 0, 0, 0, 0, 2, 2, 2]);
        let map = WeightMap::from_integers(&rows);
        let w = WeightVector::rationals(&[
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
        ]);
        assert_eq!(
            map.apply(&w),
            WeightVector::rationals(&[(1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (3, 1)])
        );
        let id = WeightMap::identity(3);
        let v = WeightVector::integers(&[4, -5, 6]);
        assert_eq!(id.apply(&v), v);
    }
}
