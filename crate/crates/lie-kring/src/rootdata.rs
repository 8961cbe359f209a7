//! Root data for E8, E6 and D5 in their standard orthonormal coordinates,
//! together with the Weyl-group machinery used by the character
//! computations.
//!
//! All three systems are simply laced and every root has squared length 2,
//! so coroots coincide with roots throughout.
//!
//! Coordinates:
//! - E8 lives in `R^8`: roots `±x_i ± x_j` (i < j) together with the 128
//!   half-integer vectors `(±1/2, ..., ±1/2)` carrying an even number of
//!   minus signs.
//! - E6 is the subsystem of E8 cut out by requiring, for the integer roots,
//!   `i < j ≤ 5`, and for the half-integer roots, equal signs in the last
//!   three coordinates.  It spans a 6-dimensional subspace of `R^8`.
//! - D5 lives in `R^5`: roots `±x_i ± x_j` (i < j ≤ 5).

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::weight::WeightVector;
use crate::{Int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("weight {weight} is not dominant: negative pairing with simple root #{index}")]
    NotDominant { weight: String, index: usize },
    #[error("weight {weight} is not in the weight lattice: pairing {value} with simple root #{index}")]
    NotIntegral {
        weight: String,
        index: usize,
        value: String,
    },
    #[error("operation at E8 scale is guarded; opt in explicitly to run it")]
    E8Guard,
    #[error("weight has dimension {found}, root system is over {expected} coordinates")]
    Dimension { expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSystemKind {
    E8,
    E6,
    D5,
}

impl RootSystemKind {
    pub fn ambient_dim(self) -> usize {
        match self {
            RootSystemKind::E8 => 8,
            RootSystemKind::E6 => 8,
            RootSystemKind::D5 => 5,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            RootSystemKind::E8 => 8,
            RootSystemKind::E6 => 6,
            RootSystemKind::D5 => 5,
        }
    }
}

/// A dominant integral weight of a fixed root system.
///
/// Constructed through [`RootSystem::dominant`], which checks that every
/// pairing with a simple coroot is a nonnegative integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DominantWeight {
    kind: RootSystemKind,
    coords: WeightVector,
}

impl DominantWeight {
    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn coords(&self) -> &WeightVector {
        &self.coords
    }

    pub fn into_coords(self) -> WeightVector {
        self.coords
    }
}

/// A fully constructed root system with simple roots, positive roots,
/// fundamental weights and the Weyl vector.
pub struct RootSystem {
    kind: RootSystemKind,
    simple_roots: Vec<WeightVector>,
    positive_roots: Vec<WeightVector>,
    all_roots: Vec<WeightVector>,
    root_set: HashSet<WeightVector>,
    fundamental_weights: Vec<WeightVector>,
    weyl_vector: WeightVector,
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// All `±x_i ± x_j` (i < j < n) inside an `ambient`-dimensional space.
fn integer_roots(ambient: usize, n: usize) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut c = vec![0i64; ambient];
                    c[i] = si;
                    c[j] = sj;
                    out.push(WeightVector::integers(&c));
                }
            }
        }
    }
    out
}

/// Half-integer E8-type roots: all `(±1/2)^8` with an even number of minus
/// signs; when `tail_equal` is set, the last three signs must agree (the E6
/// subsystem condition).
fn half_roots(tail_equal: bool) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for mask in 0u32..256 {
        let signs: Vec<i64> = (0..8).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect();
        if signs.iter().filter(|&&s| s < 0).count() % 2 != 0 {
            continue;
        }
        if tail_equal && !(signs[5] == signs[6] && signs[6] == signs[7]) {
            continue;
        }
        let coords: Vec<(i64, i64)> = signs.iter().map(|&s| (s, 2)).collect();
        out.push(WeightVector::rationals(&coords));
    }
    out
}

fn e8_roots() -> Vec<WeightVector> {
    let mut roots = integer_roots(8, 8);
    roots.extend(half_roots(false));
    roots
}

fn e6_roots() -> Vec<WeightVector> {
    let mut roots = integer_roots(8, 5);
    roots.extend(half_roots(true));
    roots
}

fn d5_roots() -> Vec<WeightVector> {
    integer_roots(5, 5)
}

/// The six simple roots of E6 in the 8-dimensional coordinates.
fn e6_simple_roots() -> Vec<WeightVector> {
    vec![
        WeightVector::rationals(&[
            (1, 2),
            (1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
        ]),
        WeightVector::integers(&[0, -1, 1, 0, 0, 0, 0, 0]),
        WeightVector::integers(&[0, 1, 1, 0, 0, 0, 0, 0]),
        WeightVector::integers(&[0, 0, -1, 1, 0, 0, 0, 0]),
        WeightVector::integers(&[0, 0, 0, -1, 1, 0, 0, 0]),
        WeightVector::rationals(&[
            (1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
        ]),
    ]
}

/// The six fundamental weights of E6 paired with the simple roots above.
fn e6_fundamental_weights() -> Vec<WeightVector> {
    vec![
        WeightVector::rationals(&[(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 3), (-1, 3), (-1, 3)]),
        WeightVector::rationals(&[(3, 2), (-1, 2), (1, 2), (1, 2), (1, 2), (-1, 6), (-1, 6), (-1, 6)]),
        WeightVector::rationals(&[(3, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 6), (1, 6), (1, 6)]),
        WeightVector::integers(&[2, 0, 0, 1, 1, 0, 0, 0]),
        WeightVector::integers(&[1, 0, 0, 0, 1, 0, 0, 0]),
        WeightVector::rationals(&[(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 3), (1, 3), (1, 3)]),
    ]
}

fn d5_simple_roots() -> Vec<WeightVector> {
    vec![
        WeightVector::integers(&[1, -1, 0, 0, 0]),
        WeightVector::integers(&[0, 1, -1, 0, 0]),
        WeightVector::integers(&[0, 0, 1, -1, 0]),
        WeightVector::integers(&[0, 0, 0, 1, -1]),
        WeightVector::integers(&[0, 0, 0, 1, 1]),
    ]
}

fn e8_simple_roots() -> Vec<WeightVector> {
    vec![
        WeightVector::rationals(&[
            (1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (-1, 2),
            (1, 2),
        ]),
        WeightVector::integers(&[1, 1, 0, 0, 0, 0, 0, 0]),
        WeightVector::integers(&[-1, 1, 0, 0, 0, 0, 0, 0]),
        WeightVector::integers(&[0, -1, 1, 0, 0, 0, 0, 0]),
        WeightVector::integers(&[0, 0, -1, 1, 0, 0, 0, 0]),
        WeightVector::integers(&[0, 0, 0, -1, 1, 0, 0, 0]),
        WeightVector::integers(&[0, 0, 0, 0, -1, 1, 0, 0]),
        WeightVector::integers(&[0, 0, 0, 0, 0, -1, 1, 0]),
    ]
}

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
fn invert_matrix(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Gram matrix of simple roots is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

impl RootSystem {
    /// Builds the named root system, checking the structural invariants
    /// (root count, simple-root/fundamental-weight duality, Weyl vector).
    pub fn build(kind: RootSystemKind) -> RootSystem {
        let (all_roots, simple_roots) = match kind {
            RootSystemKind::E8 => (e8_roots(), e8_simple_roots()),
            RootSystemKind::E6 => (e6_roots(), e6_simple_roots()),
            RootSystemKind::D5 => (d5_roots(), d5_simple_roots()),
        };
        let expected_count = match kind {
            RootSystemKind::E8 => 240,
            RootSystemKind::E6 => 72,
            RootSystemKind::D5 => 40,
        };
        assert_eq!(all_roots.len(), expected_count, "root count for {kind:?}");
        let root_set: HashSet<WeightVector> = all_roots.iter().cloned().collect();
        assert_eq!(root_set.len(), expected_count, "roots are distinct");
        for alpha in &all_roots {
            assert_eq!(alpha.norm_sq(), rat(2, 1), "all roots have squared length 2");
            assert!(root_set.contains(&-alpha), "roots come in opposite pairs");
        }

        let rank = kind.rank();
        assert_eq!(simple_roots.len(), rank);
        let gram: Vec<Vec<Rational>> = simple_roots
            .iter()
            .map(|a| simple_roots.iter().map(|b| a.dot(b)).collect())
            .collect();
        let gram_inv = invert_matrix(&gram);

        // Coefficients of v in the simple-root basis (None if v is outside
        // the span).
        let coeffs = |v: &WeightVector| -> Option<Vec<Rational>> {
            let pairings: Vec<Rational> = simple_roots.iter().map(|a| a.dot(v)).collect();
            let c: Vec<Rational> = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| &gram_inv[i][j] * &pairings[j])
                        .sum::<Rational>()
                })
                .collect();
            let mut recon = WeightVector::zero(kind.ambient_dim());
            for (ci, alpha) in c.iter().zip(&simple_roots) {
                recon = recon.add_scaled(ci, alpha);
            }
            (recon == *v).then_some(c)
        };

        let mut positive_roots = Vec::new();
        for alpha in &all_roots {
            let c = coeffs(alpha).expect("every root lies in the simple-root span");
            let nonneg = c.iter().all(|x| !x.is_negative());
            let nonpos = c.iter().all(|x| !x.is_positive());
            assert!(
                nonneg ^ nonpos,
                "root {alpha} must be positive or negative in the chosen base"
            );
            if nonneg {
                positive_roots.push(alpha.clone());
            }
        }
        assert_eq!(positive_roots.len(), expected_count / 2);

        // Fundamental weights: solve <w_i, a_j> = delta_ij inside the span
        // of the simple roots.
        let fundamental_weights: Vec<WeightVector> = (0..rank)
            .map(|i| {
                let mut w = WeightVector::zero(kind.ambient_dim());
                for k in 0..rank {
                    w = w.add_scaled(&gram_inv[k][i], &simple_roots[k]);
                }
                w
            })
            .collect();
        if kind == RootSystemKind::E6 {
            assert_eq!(
                fundamental_weights,
                e6_fundamental_weights(),
                "E6 fundamental weights in the fixed coordinates"
            );
        }
        for (i, w) in fundamental_weights.iter().enumerate() {
            for (j, a) in simple_roots.iter().enumerate() {
                let expect = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(w.dot(a), expect, "duality of fundamental weights");
            }
        }

        let mut weyl_vector = WeightVector::zero(kind.ambient_dim());
        for alpha in &positive_roots {
            weyl_vector = weyl_vector.add_scaled(&Rational::one(), alpha);
        }
        weyl_vector = weyl_vector.scaled(&rat(1, 2));
        for alpha in &simple_roots {
            assert_eq!(weyl_vector.dot(alpha), Rational::one(), "<rho, alpha_i> = 1");
        }
        let mut sum_fw = WeightVector::zero(kind.ambient_dim());
        for w in &fundamental_weights {
            sum_fw = &sum_fw + w;
        }
        assert_eq!(sum_fw, weyl_vector, "rho is the sum of the fundamental weights");

        RootSystem {
            kind,
            simple_roots,
            positive_roots,
            all_roots,
            root_set,
            fundamental_weights,
            weyl_vector,
        }
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn ambient_dim(&self) -> usize {
        self.kind.ambient_dim()
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn simple_roots(&self) -> &[WeightVector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.positive_roots
    }

    pub fn all_roots(&self) -> &[WeightVector] {
        &self.all_roots
    }

    pub fn is_root(&self, v: &WeightVector) -> bool {
        self.root_set.contains(v)
    }

    pub fn fundamental_weights(&self) -> &[WeightVector] {
        &self.fundamental_weights
    }

    /// 1-based fundamental weight accessor following the Dynkin labels used
    /// throughout (E6 nodes 1..6, D5 nodes 1..5).
    pub fn fundamental_weight(&self, i: usize) -> &WeightVector {
        &self.fundamental_weights[i - 1]
    }

    pub fn weyl_vector(&self) -> &WeightVector {
        &self.weyl_vector
    }

    /// Reflection in the hyperplane orthogonal to `root`:
    /// `v - 2<v,root>/<root,root> * root`.
    pub fn reflect(&self, v: &WeightVector, root: &WeightVector) -> WeightVector {
        let k = -(v.dot(root) * rat(2, 1) / root.norm_sq());
        v.add_scaled(&k, root)
    }

    pub fn simple_reflection(&self, v: &WeightVector, i: usize) -> WeightVector {
        self.reflect(v, &self.simple_roots[i])
    }

    /// Height `<v, rho>` used to order weights.
    pub fn height(&self, v: &WeightVector) -> Rational {
        self.weyl_vector.dot(v)
    }

    pub fn is_dominant(&self, v: &WeightVector) -> bool {
        self.simple_roots.iter().all(|a| !v.dot(a).is_negative())
    }

    /// Checks that `v` is a dominant weight of the weight lattice: every
    /// pairing with a simple coroot must be a nonnegative integer.
    pub fn dominant(&self, v: WeightVector) -> Result<DominantWeight, RootError> {
        if v.dim() != self.ambient_dim() {
            return Err(RootError::Dimension {
                expected: self.ambient_dim(),
                found: v.dim(),
            });
        }
        for (i, a) in self.simple_roots.iter().enumerate() {
            // coroot = root for squared length 2
            let p = v.dot(a);
            if !p.is_integer() {
                return Err(RootError::NotIntegral {
                    weight: v.to_string(),
                    index: i + 1,
                    value: p.to_string(),
                });
            }
            if p.is_negative() {
                return Err(RootError::NotDominant {
                    weight: v.to_string(),
                    index: i + 1,
                });
            }
        }
        Ok(DominantWeight {
            kind: self.kind,
            coords: v,
        })
    }

    /// The unique dominant weight in the Weyl orbit of `v`, found by
    /// reflecting at a negatively paired simple root until none remains.
    pub fn dominant_representative(&self, v: &WeightVector) -> WeightVector {
        let mut w = v.clone();
        'outer: loop {
            for a in &self.simple_roots {
                if w.dot(a).is_negative() {
                    w = self.reflect(&w, a);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Full Weyl orbit of `v`, as a sorted vector of distinct weights.
    pub fn weyl_orbit(&self, v: &WeightVector) -> Vec<WeightVector> {
        let mut seen: HashSet<WeightVector> = HashSet::new();
        let mut queue: VecDeque<WeightVector> = VecDeque::new();
        seen.insert(v.clone());
        queue.push_back(v.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.simple_reflection(&w, i);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let sorted: BTreeSet<WeightVector> = seen.into_iter().collect();
        sorted.into_iter().collect()
    }

    /// Order of the Weyl group, computed as the size of the orbit of the
    /// Weyl vector (a strictly dominant point, so its stabilizer is
    /// trivial).
    ///
    /// The E8 orbit has 696 729 600 elements and enumerating it is far
    /// beyond a reasonable default budget, so E8 is guarded; see
    /// [`RootSystem::weyl_group_order_forced`].
    pub fn weyl_group_order(&self) -> Result<Int, RootError> {
        if self.kind == RootSystemKind::E8 {
            return Err(RootError::E8Guard);
        }
        Ok(self.weyl_group_order_forced())
    }

    /// Unguarded Weyl-group order; at E8 scale this enumerates an orbit of
    /// ~7·10^8 weight vectors and needs tens of gigabytes of memory.
    pub fn weyl_group_order_forced(&self) -> Int {
        Int::from(self.weyl_orbit(&self.weyl_vector).len())
    }

    /// Weyl-group order by orbit–stabilizer descent through parabolic
    /// subgroups: repeatedly delete a leaf of the Dynkin diagram and
    /// multiply by the orbit size of a vector dual to the deleted node.
    /// Every orbit along the chain is small (at most 17280 for E8), so
    /// this stays feasible where the single ρ-orbit does not.
    pub fn weyl_group_order_by_parabolic_descent(&self) -> Int {
        let mut simple: Vec<WeightVector> = self.simple_roots.clone();
        let mut order = Int::one();
        while !simple.is_empty() {
            let k = leaf_index(&simple);
            let v = dual_vector(&simple, k);
            order *= Int::from(orbit_size(&simple, &v));
            simple.remove(k);
        }
        order
    }

    /// Weyl dimension formula
    /// `dim V_λ = Π_{α>0} <λ+ρ, α> / <ρ, α>`, evaluated exactly.
    pub fn weyl_dimension(&self, hw: &DominantWeight) -> Int {
        assert_eq!(hw.kind, self.kind, "dominant weight from a different root system");
        let shifted = hw.coords() + &self.weyl_vector;
        let mut num = Rational::one();
        for alpha in &self.positive_roots {
            num *= shifted.dot(alpha) / self.weyl_vector.dot(alpha);
        }
        assert!(num.is_integer(), "Weyl dimension must be an integer");
        num.to_integer()
    }
}

/// Index of a node with at most one neighbor in the Dynkin graph of
/// `simple`; a forest always has one.
fn leaf_index(simple: &[WeightVector]) -> usize {
    for i in 0..simple.len() {
        let degree = (0..simple.len())
            .filter(|&j| j != i && !simple[i].dot(&simple[j]).is_zero())
            .count();
        if degree <= 1 {
            return i;
        }
    }
    unreachable!("a Dynkin diagram is a forest and has a leaf")
}

/// The vector in span(simple) with `<v, simple[j]> = δ_{jk}`.  It is
/// dominant for the subsystem, so its stabilizer in the subsystem's Weyl
/// group is generated by the reflections in the other simple roots.
fn dual_vector(simple: &[WeightVector], k: usize) -> WeightVector {
    let n = simple.len();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| simple[i].dot(&simple[j])).collect();
            row.push(if i == k { Rational::one() } else { Rational::zero() });
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("the Gram matrix of independent roots is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry = &*entry / &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=n {
                    let delta = &m[col][c] * &f;
                    m[r][c] -= delta;
                }
            }
        }
    }
    let mut v = WeightVector::zero(simple[0].dim());
    for (i, root) in simple.iter().enumerate() {
        v = v.add_scaled(&m[i][n], root);
    }
    v
}

/// Orbit size of `v` under the group generated by reflections in `simple`.
fn orbit_size(simple: &[WeightVector], v: &WeightVector) -> usize {
    let mut seen: HashSet<WeightVector> = HashSet::new();
    let mut queue: VecDeque<WeightVector> = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(w) = queue.pop_front() {
        for root in simple {
            let k = -(w.dot(root) * rat(2, 1) / root.norm_sq());
            let image = w.add_scaled(&k, root);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn root_counts_and_lengths() {
        for (kind, n) in [
            (RootSystemKind::D5, 40),
            (RootSystemKind::E6, 72),
            (RootSystemKind::E8, 240),
        ] {
            let rs = RootSystem::build(kind);
            assert_eq!(rs.all_roots().len(), n);
            assert_eq!(rs.positive_roots().len(), n / 2);
        }
    }

    #[test]
    fn e6_root_count_matches_dimension_minus_rank() {
        // dim e6 = 78, rank 6
        assert_eq!(RootSystem::build(RootSystemKind::E6).all_roots().len(), 78 - 6);
    }

    #[test]
    fn e6_dynkin_diagram_shape() {
        let rs = RootSystem::build(RootSystemKind::E6);
        // Adjacency (pairing -1) must be exactly: 1-2, 2-4, 4-3, 3-6, 4-5.
        let mut edges = BTreeSet::new();
        for i in 0..6 {
            for j in (i + 1)..6 {
                let p = rs.simple_roots()[i].dot(&rs.simple_roots()[j]);
                if p == rat(-1, 1) {
                    edges.insert((i + 1, j + 1));
                } else {
                    assert!(p.is_zero(), "simple roots pair in {{0,-1}}");
                }
            }
        }
        let expected: BTreeSet<(usize, usize)> =
            [(1, 2), (2, 4), (3, 4), (3, 6), (4, 5)].into_iter().collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn e6_fundamental_weights_are_the_expected_formulas() {
        let rs = RootSystem::build(RootSystemKind::E6);
        // spot check the two minuscule nodes and the adjoint node
        assert_eq!(
            rs.fundamental_weight(1),
            &WeightVector::rationals(&[
                (1, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (-1, 3),
                (-1, 3),
                (-1, 3)
            ])
        );
        assert_eq!(rs.fundamental_weight(5), &WeightVector::integers(&[1, 0, 0, 0, 1, 0, 0, 0]));
        assert_eq!(
            rs.fundamental_weight(6),
            &WeightVector::rationals(&[
                (1, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (1, 3),
                (1, 3),
                (1, 3)
            ])
        );
    }

    #[test]
    fn d5_fundamental_weights() {
        let rs = RootSystem::build(RootSystemKind::D5);
        assert_eq!(rs.fundamental_weight(1), &WeightVector::integers(&[1, 0, 0, 0, 0]));
        assert_eq!(rs.fundamental_weight(2), &WeightVector::integers(&[1, 1, 0, 0, 0]));
        assert_eq!(rs.fundamental_weight(3), &WeightVector::integers(&[1, 1, 1, 0, 0]));
        assert_eq!(
            rs.fundamental_weight(4),
            &WeightVector::rationals(&[(1, 2), (1, 2), (1, 2), (1, 2), (-1, 2)])
        );
        assert_eq!(
            rs.fundamental_weight(5),
            &WeightVector::rationals(&[(1, 2), (1, 2), (1, 2), (1, 2), (1, 2)])
        );
    }

    #[test]
    fn weyl_orbits() {
        let d5 = RootSystem::build(RootSystemKind::D5);
        assert_eq!(d5.weyl_orbit(&WeightVector::zero(5)).len(), 1);
        // orbit of x1 is ±x_i
        let orbit = d5.weyl_orbit(&WeightVector::integers(&[1, 0, 0, 0, 0]));
        assert_eq!(orbit.len(), 10);
        assert!(orbit.contains(&WeightVector::integers(&[0, 0, -1, 0, 0])));
        // half-spin orbit: 16 vectors
        assert_eq!(d5.weyl_orbit(d5.fundamental_weight(5)).len(), 16);

        let e6 = RootSystem::build(RootSystemKind::E6);
        assert_eq!(e6.weyl_orbit(e6.fundamental_weight(1)).len(), 27);
        assert_eq!(e6.weyl_orbit(e6.fundamental_weight(6)).len(), 27);
    }

    #[test]
    fn dominant_representatives() {
        let d5 = RootSystem::build(RootSystemKind::D5);
        let w = d5.dominant_representative(&WeightVector::integers(&[0, 0, 0, 0, -1]));
        assert_eq!(w, WeightVector::integers(&[1, 0, 0, 0, 0]));
        let v = WeightVector::integers(&[-3, 1, 0, 2, 0]);
        let rep = d5.dominant_representative(&v);
        assert!(d5.is_dominant(&rep));
        assert!(d5.weyl_orbit(&v).contains(&rep));
    }

    #[test]
    fn dominant_weight_validation() {
        let d5 = RootSystem::build(RootSystemKind::D5);
        assert!(d5.dominant(WeightVector::integers(&[1, 1, 0, 0, 0])).is_ok());
        match d5.dominant(WeightVector::integers(&[0, 1, 0, 0, 0])) {
            Err(RootError::NotDominant { index: 1, .. }) => {}
            other => panic!("expected dominance failure, got {other:?}"),
        }
        // x1/3 pairs non-integrally
        match d5.dominant(WeightVector::rationals(&[(1, 3), (0, 1), (0, 1), (0, 1), (0, 1)])) {
            Err(RootError::NotIntegral { .. }) => {}
            other => panic!("expected integrality failure, got {other:?}"),
        }
    }

    #[test]
    fn weyl_group_orders() {
        let d5 = RootSystem::build(RootSystemKind::D5);
        assert_eq!(d5.weyl_group_order().unwrap(), big(1920));
        let e6 = RootSystem::build(RootSystemKind::E6);
        assert_eq!(e6.weyl_group_order().unwrap(), big(51840));
        let e8 = RootSystem::build(RootSystemKind::E8);
        assert_eq!(e8.weyl_group_order().unwrap_err(), RootError::E8Guard);
    }

    #[test]
    fn parabolic_descent_matches_orbit_counts() {
        let d5 = RootSystem::build(RootSystemKind::D5);
        assert_eq!(d5.weyl_group_order_by_parabolic_descent(), big(1920));
        let e6 = RootSystem::build(RootSystemKind::E6);
        assert_eq!(e6.weyl_group_order_by_parabolic_descent(), big(51840));
        // the descent makes the E8 order reachable: 2^14 * 3^5 * 5^2 * 7
        let e8 = RootSystem::build(RootSystemKind::E8);
        assert_eq!(e8.weyl_group_order_by_parabolic_descent(), big(696_729_600));
    }

    #[test]
    fn weyl_dimensions_of_fundamental_representations() {
        let e6 = RootSystem::build(RootSystemKind::E6);
        let dims: Vec<BigInt> = (1..=6)
            .map(|i| {
                let hw = e6.dominant(e6.fundamental_weight(i).clone()).unwrap();
                e6.weyl_dimension(&hw)
            })
            .collect();
        assert_eq!(dims, vec![big(27), big(351), big(351), big(2925), big(78), big(27)]);

        let d5 = RootSystem::build(RootSystemKind::D5);
        let dims: Vec<BigInt> = (1..=5)
            .map(|i| {
                let hw = d5.dominant(d5.fundamental_weight(i).clone()).unwrap();
                d5.weyl_dimension(&hw)
            })
            .collect();
        assert_eq!(dims, vec![big(10), big(45), big(120), big(16), big(16)]);

        // highest weight of Λ²(Λ²(C^10)); the full exterior square is this
        // 945-dimensional irreducible plus the 45-dimensional adjoint
        let hw = d5.dominant(WeightVector::integers(&[2, 1, 1, 0, 0])).unwrap();
        assert_eq!(d5.weyl_dimension(&hw), big(945));
        // Λ⁴(C^10) stays irreducible with highest weight x1+x2+x3+x4
        let hw = d5.dominant(WeightVector::integers(&[1, 1, 1, 1, 0])).unwrap();
        assert_eq!(d5.weyl_dimension(&hw), big(210));
    }

    #[test]
    fn zero_weight_is_dominant_with_dimension_one() {
        let e6 = RootSystem::build(RootSystemKind::E6);
        let hw = e6.dominant(WeightVector::zero(8)).unwrap();
        assert_eq!(e6.weyl_dimension(&hw), big(1));
    }

    #[test]
    fn e8_adjoint_dimension_check() {
        let e8 = RootSystem::build(RootSystemKind::E8);
        // highest root of E8 in these coordinates is x7 + x8
        let hw = e8
            .dominant(WeightVector::integers(&[0, 0, 0, 0, 0, 0, 1, 1]))
            .unwrap();
        assert_eq!(e8.weyl_dimension(&hw), big(248));
    }
}
