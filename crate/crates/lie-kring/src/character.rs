//! Sparse formal characters: finitely supported `Z`-linear combinations of
//! torus weights, with the λ-ring operations needed for representation-ring
//! identities.
//!
//! Multiplicities are arbitrary-precision integers and may be negative
//! (virtual characters).  The term map is a `BTreeMap`, so iteration order —
//! and hence the canonical text serialization — is the lexicographic order
//! of the weight coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::weight::{WeightMap, WeightVector};
use crate::{Int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("weight {weight} has dimension {found}, character is over {expected} coordinates")]
    WeightDimension {
        weight: String,
        expected: usize,
        found: usize,
    },
    #[error("character is not effective: weight {weight} has multiplicity {mult}")]
    NotEffective { weight: String, mult: Int },
    #[error("internal consistency failure: non-integer multiplicity {value} at weight {weight}")]
    NonIntegralMultiplicity { weight: String, value: String },
    #[error("linear map expects {expected} source coordinates, character has {found}")]
    MapShape { expected: usize, found: usize },
    #[error("cannot parse character line {0:?}")]
    Parse(String),
}

/// A finitely supported integer combination of weights of a fixed torus.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FormalCharacter {
    ambient_dim: usize,
    terms: BTreeMap<WeightVector, Int>,
}

impl FormalCharacter {
    pub fn zero(ambient_dim: usize) -> Self {
        FormalCharacter {
            ambient_dim,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of the character ring: the zero weight with multiplicity one.
    pub fn trivial(ambient_dim: usize) -> Self {
        let mut c = FormalCharacter::zero(ambient_dim);
        c.add_term(WeightVector::zero(ambient_dim), Int::one());
        c
    }

    pub fn from_terms<I>(ambient_dim: usize, terms: I) -> Result<Self, CharError>
    where
        I: IntoIterator<Item = (WeightVector, Int)>,
    {
        let mut c = FormalCharacter::zero(ambient_dim);
        for (w, m) in terms {
            if w.dim() != ambient_dim {
                return Err(CharError::WeightDimension {
                    weight: w.to_string(),
                    expected: ambient_dim,
                    found: w.dim(),
                });
            }
            c.add_term(w, m);
        }
        Ok(c)
    }

    /// Character of a plain weight multiset (every listed weight counts once).
    pub fn from_weights<I>(ambient_dim: usize, weights: I) -> Result<Self, CharError>
    where
        I: IntoIterator<Item = WeightVector>,
    {
        FormalCharacter::from_terms(ambient_dim, weights.into_iter().map(|w| (w, Int::one())))
    }

    /// Adds `mult` copies of `weight`, dropping the term if it cancels.
    pub fn add_term(&mut self, weight: WeightVector, mult: Int) {
        assert_eq!(weight.dim(), self.ambient_dim, "term dimension mismatch");
        if mult.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(weight) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(mult);
            }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct weights in the support.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Virtual dimension: the sum of all multiplicities.
    pub fn dimension(&self) -> Int {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, w: &WeightVector) -> Int {
        self.terms.get(w).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, &Int)> {
        self.terms.iter()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|m| !m.is_negative())
    }

    fn check_dim(&self, other: &FormalCharacter) -> Result<(), CharError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(CharError::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FormalCharacter) -> Result<FormalCharacter, CharError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FormalCharacter) -> Result<FormalCharacter, CharError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), -m.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.ambient_dim);
        for (w, m) in &self.terms {
            out.terms.insert(w.clone(), -m.clone());
        }
        out
    }

    pub fn scaled(&self, k: &Int) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.ambient_dim);
        if k.is_zero() {
            return out;
        }
        for (w, m) in &self.terms {
            out.terms.insert(w.clone(), m * k);
        }
        out
    }

    /// Product in the character ring: weights add, multiplicities multiply.
    pub fn multiply(&self, other: &FormalCharacter) -> Result<FormalCharacter, CharError> {
        self.check_dim(other)?;
        let mut out = FormalCharacter::zero(self.ambient_dim);
        for (w1, m1) in &self.terms {
            for (w2, m2) in &other.terms {
                out.add_term(w1 + w2, m1 * m2);
            }
        }
        Ok(out)
    }

    /// Translates every weight by `shift` (multiplication by the monomial of
    /// `shift`).
    pub fn translated(&self, shift: &WeightVector) -> FormalCharacter {
        assert_eq!(shift.dim(), self.ambient_dim);
        let mut out = FormalCharacter::zero(self.ambient_dim);
        for (w, m) in &self.terms {
            out.terms.insert(w + shift, m.clone());
        }
        out
    }

    /// Adams operation ψ^k: scales every weight by `k`.
    pub fn adams(&self, k: u32) -> FormalCharacter {
        assert!(k >= 1, "Adams operations are indexed by positive integers");
        let factor = Rational::from_integer(Int::from(k));
        let mut out = FormalCharacter::zero(self.ambient_dim);
        for (w, m) in &self.terms {
            out.terms.insert(w.scaled(&factor), m.clone());
        }
        out
    }

    /// Dual character: every weight is negated.
    pub fn conjugate(&self) -> FormalCharacter {
        let mut out = FormalCharacter::zero(self.ambient_dim);
        for (w, m) in &self.terms {
            out.terms.insert(-w, m.clone());
        }
        out
    }

    fn divide_exact(&self, k: &Int) -> Result<FormalCharacter, CharError> {
        let mut out = FormalCharacter::zero(self.ambient_dim);
        for (w, m) in &self.terms {
            let (q, r) = m.div_rem(k);
            if !r.is_zero() {
                return Err(CharError::NonIntegralMultiplicity {
                    weight: w.to_string(),
                    value: format!("{}/{}", m, k),
                });
            }
            out.terms.insert(w.clone(), q);
        }
        Ok(out)
    }

    /// Exterior power Λ^k via the Newton identity
    /// `k·e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i}·ψ^i(χ)`.
    ///
    /// Requires an effective character; the division by `k` is checked to be
    /// exact at every step.
    pub fn exterior_power(&self, k: u32) -> Result<FormalCharacter, CharError> {
        if let Some((w, m)) = self.terms.iter().find(|(_, m)| m.is_negative()) {
            return Err(CharError::NotEffective {
                weight: w.to_string(),
                mult: m.clone(),
            });
        }
        let mut e: Vec<FormalCharacter> = vec![FormalCharacter::trivial(self.ambient_dim)];
        let psi: Vec<FormalCharacter> = (1..=k).map(|i| self.adams(i)).collect();
        for j in 1..=k {
            let mut acc = FormalCharacter::zero(self.ambient_dim);
            for i in 1..=j {
                let term = e[(j - i) as usize].multiply(&psi[(i - 1) as usize])?;
                acc = if i % 2 == 1 { acc.add(&term)? } else { acc.sub(&term)? };
            }
            e.push(acc.divide_exact(&Int::from(j))?);
        }
        Ok(e.pop().expect("e_k computed"))
    }

    /// Pushes the character through a linear weight map; colliding target
    /// weights are summed.
    pub fn project(&self, map: &WeightMap) -> Result<FormalCharacter, CharError> {
        if map.source_dim() != self.ambient_dim {
            return Err(CharError::MapShape {
                expected: map.source_dim(),
                found: self.ambient_dim,
            });
        }
        let mut out = FormalCharacter::zero(map.target_dim());
        for (w, m) in &self.terms {
            out.add_term(map.apply(w), m.clone());
        }
        Ok(out)
    }

    /// Canonical text form: one `mult * (c1,...,cn)` line per term, in
    /// ascending lexicographic weight order.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        for (w, m) in &self.terms {
            out.push_str(&format!("{} * {}\n", m, w));
        }
        out
    }

    /// Parses the canonical text form back into a character.
    pub fn parse_canonical(ambient_dim: usize, text: &str) -> Result<Self, CharError> {
        let mut c = FormalCharacter::zero(ambient_dim);
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (mult, weight) = line
                .split_once(" * ")
                .ok_or_else(|| CharError::Parse(line.to_string()))?;
            let m: Int = mult
                .trim()
                .parse()
                .map_err(|_| CharError::Parse(line.to_string()))?;
            let w: WeightVector = weight
                .trim()
                .parse()
                .map_err(|_| CharError::Parse(line.to_string()))?;
            if w.dim() != ambient_dim {
                return Err(CharError::WeightDimension {
                    weight: w.to_string(),
                    expected: ambient_dim,
                    found: w.dim(),
                });
            }
            c.add_term(w, m);
        }
        Ok(c)
    }
}

impl fmt::Display for FormalCharacter {
    /// Shows the canonical text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

impl fmt::Debug for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FormalCharacter(dim {}, {} terms, virtual dim {})",
            self.ambient_dim,
            self.terms.len(),
            self.dimension()
        )
    }
}
