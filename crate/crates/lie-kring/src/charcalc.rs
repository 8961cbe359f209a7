//! Character computations: Freudenthal weight multiplicities, assembly of
//! irreducible characters, decomposition of Weyl-invariant characters, and
//! the Spin(10)-level identities (the λ1·λ3 relation, the weight-type
//! table, the Clifford relation for the half-spin characters).
//!
//! Irreducible characters are computed from scratch via Freudenthal's
//! recursion; the independent cross-checks (explicit weight multisets for
//! the exterior powers of the vector representation and for the half-spin
//! representations) live next to them and are compared in tests and in the
//! verification suites.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::character::{CharError, FormalCharacter};
use crate::rootdata::{DominantWeight, RootError, RootSystem, RootSystemKind};
use crate::weight::WeightVector;
use crate::{Int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CalcError {
    #[error("irreducible characters at E8 scale are not built by Freudenthal recursion; only the adjoint is available directly")]
    E8Scale,
    #[error("character is not invariant under the Weyl group (simple reflection #{index} moves weight {weight})")]
    NotWeylInvariant { index: usize, weight: String },
    #[error("decomposition did not terminate within {0} peeling steps")]
    IterationBound(usize),
    #[error("weight {weight} of the candidate character matches no tabulated type")]
    UnclassifiedWeight { weight: String },
    #[error("weights of type {label:?} carry non-constant multiplicity ({first} vs {second})")]
    NonConstantType {
        label: String,
        first: Int,
        second: Int,
    },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Multiset of dominant weights with multiplicities: the result of
/// decomposing a character into irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrDecomposition {
    kind: RootSystemKind,
    terms: BTreeMap<DominantWeight, Int>,
}

impl IrrDecomposition {
    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DominantWeight, &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, hw: &DominantWeight) -> Int {
        self.terms.get(hw).cloned().unwrap_or_else(Int::zero)
    }

    /// Convenience comparison against `[(coords, mult)]` pairs.
    pub fn matches(&self, rs: &RootSystem, expected: &[(WeightVector, i64)]) -> bool {
        if self.terms.len() != expected.len() {
            return false;
        }
        expected.iter().all(|(coords, m)| {
            rs.dominant(coords.clone())
                .map(|hw| self.multiplicity(&hw) == Int::from(*m))
                .unwrap_or(false)
        })
    }
}

/// Dominant weights `μ ≤ λ`, generated by walking down from `λ` through
/// positive-root steps and keeping the dominant points.
///
/// Covers of dominant weights in the dominance order are single
/// positive-root steps, so this walk reaches the whole set; the final
/// dimension assertion in `irreducible_character` independently confirms
/// completeness.
fn dominant_layer(rs: &RootSystem, top: &WeightVector) -> Vec<WeightVector> {
    let mut seen: Vec<WeightVector> = vec![top.clone()];
    let mut found: std::collections::HashSet<WeightVector> =
        [top.clone()].into_iter().collect();
    let mut queue: Vec<WeightVector> = vec![top.clone()];
    while let Some(v) = queue.pop() {
        for alpha in rs.positive_roots() {
            let w = &v - alpha;
            if rs.is_dominant(&w) && found.insert(w.clone()) {
                seen.push(w.clone());
                queue.push(w);
            }
        }
    }
    // decreasing height; ties broken lexicographically for determinism
    seen.sort_by(|a, b| {
        (rs.height(b), b).partial_cmp(&(rs.height(a), a)).unwrap()
    });
    seen
}

/// Weight multiplicities of the irreducible with highest weight `hw`,
/// restricted to the dominant chamber, via Freudenthal's recursion
/// `(<λ+ρ,λ+ρ> - <μ+ρ,μ+ρ>) m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) <μ+kα,α>`.
pub fn dominant_weight_multiplicities(
    rs: &RootSystem,
    hw: &DominantWeight,
) -> Result<BTreeMap<WeightVector, Int>, CalcError> {
    if rs.kind() == RootSystemKind::E8 {
        return Err(CalcError::E8Scale);
    }
    assert_eq!(hw.kind(), rs.kind());
    let top = hw.coords().clone();
    let rho = rs.weyl_vector().clone();
    let c_top = (&top + &rho).norm_sq();

    let layer = dominant_layer(rs, &top);
    let mut dominant_mults: BTreeMap<WeightVector, Int> = BTreeMap::new();
    // multiplicities of every weight seen so far (whole orbits), so the
    // inner sums are plain lookups
    let mut all_mults: HashMap<WeightVector, Int> = HashMap::new();

    for mu in &layer {
        let m = if *mu == top {
            Int::one()
        } else {
            let mut sum = Rational::zero();
            for alpha in rs.positive_roots() {
                let mut nu = mu + alpha;
                while let Some(m_nu) = all_mults.get(&nu) {
                    sum += nu.dot(alpha) * Rational::from_integer(m_nu.clone());
                    nu = &nu + alpha;
                }
            }
            let denom = &c_top - (mu + &rho).norm_sq();
            assert!(denom.is_positive(), "Freudenthal denominator must be positive");
            let m = sum * Rational::from_integer(Int::from(2)) / denom;
            assert!(m.is_integer(), "Freudenthal multiplicity must be integral");
            m.to_integer()
        };
        for w in rs.weyl_orbit(mu) {
            all_mults.insert(w, m.clone());
        }
        dominant_mults.insert(mu.clone(), m);
    }
    Ok(dominant_mults)
}

/// Full irreducible character of highest weight `hw`, assembled from the
/// dominant multiplicities by Weyl symmetry.  The total dimension is
/// checked against the Weyl dimension formula.
pub fn irreducible_character(
    rs: &RootSystem,
    hw: &DominantWeight,
) -> Result<FormalCharacter, CalcError> {
    let dominant_mults = dominant_weight_multiplicities(rs, hw)?;
    let mut chi = FormalCharacter::zero(rs.ambient_dim());
    for (mu, m) in &dominant_mults {
        for w in rs.weyl_orbit(mu) {
            chi.add_term(w, m.clone());
        }
    }
    assert_eq!(
        chi.dimension(),
        rs.weyl_dimension(hw),
        "character dimension must match the Weyl dimension formula"
    );
    Ok(chi)
}

/// Adjoint character of E8, built directly from the root system: every
/// root once, plus the zero weight with multiplicity 8.
pub fn adjoint_character_e8() -> FormalCharacter {
    let rs = RootSystem::build(RootSystemKind::E8);
    let mut chi = FormalCharacter::zero(8);
    for alpha in rs.all_roots() {
        chi.add_term(alpha.clone(), Int::one());
    }
    chi.add_term(WeightVector::zero(8), Int::from(8));
    assert_eq!(chi.dimension(), Int::from(248));
    chi
}

pub fn is_weyl_invariant(rs: &RootSystem, chi: &FormalCharacter) -> bool {
    weyl_invariance_defect(rs, chi).is_none()
}

fn weyl_invariance_defect(rs: &RootSystem, chi: &FormalCharacter) -> Option<(usize, WeightVector)> {
    for i in 0..rs.rank() {
        for (w, m) in chi.terms() {
            let r = rs.simple_reflection(w, i);
            if chi.multiplicity(&r) != *m {
                return Some((i, w.clone()));
            }
        }
    }
    None
}

const PEEL_BOUND: usize = 20_000;

/// Decomposes a Weyl-invariant character into irreducibles by repeatedly
/// peeling off the highest dominant term (selected by ρ-height, ties by
/// lexicographic order on coordinates).
pub fn decompose(rs: &RootSystem, chi: &FormalCharacter) -> Result<IrrDecomposition, CalcError> {
    if let Some((index, weight)) = weyl_invariance_defect(rs, chi) {
        return Err(CalcError::NotWeylInvariant {
            index: index + 1,
            weight: weight.to_string(),
        });
    }
    let mut rem = chi.clone();
    let mut terms: BTreeMap<DominantWeight, Int> = BTreeMap::new();
    let mut steps = 0usize;
    while !rem.is_zero() {
        steps += 1;
        if steps > PEEL_BOUND {
            return Err(CalcError::IterationBound(PEEL_BOUND));
        }
        let (w, m) = rem
            .terms()
            .filter(|(w, _)| rs.is_dominant(w))
            .max_by(|(a, _), (b, _)| {
                (rs.height(a), *a).partial_cmp(&(rs.height(b), *b)).unwrap()
            })
            .map(|(w, m)| (w.clone(), m.clone()))
            .expect("a nonzero Weyl-invariant character has a dominant term");
        let hw = rs.dominant(w)?;
        let irr = irreducible_character(rs, &hw)?;
        rem = rem.sub(&irr.scaled(&m))?;
        terms.insert(hw, m);
    }
    Ok(IrrDecomposition {
        kind: rs.kind(),
        terms,
    })
}

/// Reassembles `Σ m_λ · χ_λ` from a decomposition (the round-trip partner
/// of [`decompose`]).
pub fn assemble(rs: &RootSystem, dec: &IrrDecomposition) -> Result<FormalCharacter, CalcError> {
    assert_eq!(dec.kind, rs.kind());
    let mut chi = FormalCharacter::zero(rs.ambient_dim());
    for (hw, m) in &dec.terms {
        chi = chi.add(&irreducible_character(rs, hw)?.scaled(m))?;
    }
    Ok(chi)
}

// ---------------------------------------------------------------------------
// Spin(10) building blocks: explicit weight multisets.
// ---------------------------------------------------------------------------

/// Character of the 10-dimensional vector representation: weights `±x_i`.
pub fn spin10_standard() -> FormalCharacter {
    let mut chi = FormalCharacter::zero(5);
    for i in 0..5 {
        for s in [1i64, -1] {
            let mut c = [0i64; 5];
            c[i] = s;
            chi.add_term(WeightVector::integers(&c), Int::one());
        }
    }
    chi
}

/// Character λ_k = Λ^k of the vector representation, computed by the
/// exterior-power operation on the explicit 10-weight multiset.
pub fn spin10_lambda(k: u32) -> FormalCharacter {
    spin10_standard()
        .exterior_power(k)
        .expect("the standard character is effective")
}

/// Half-spin character Δ⁺ (`positive = true`) or Δ⁻: the sixteen weights
/// `(±1/2,...,±1/2)` with an even (resp. odd) number of minus signs.
pub fn spin10_half_spin(positive: bool) -> FormalCharacter {
    let mut chi = FormalCharacter::zero(5);
    for mask in 0u32..32 {
        let minus = mask.count_ones() as usize;
        if (minus % 2 == 0) != positive {
            continue;
        }
        let coords: Vec<(i64, i64)> = (0..5)
            .map(|b| (if mask >> b & 1 == 1 { -1 } else { 1 }, 2))
            .collect();
        chi.add_term(WeightVector::rationals(&coords), Int::one());
    }
    assert_eq!(chi.dimension(), Int::from(16));
    chi
}

/// The commonly used basis of Spin(10) characters, built once.
pub struct Spin10Basis {
    pub lambda: [FormalCharacter; 5],
    pub delta_plus: FormalCharacter,
    pub delta_minus: FormalCharacter,
    /// Λ²(λ₂), needed by the graded exterior-square identities.
    pub ext2_lambda2: FormalCharacter,
}

impl Spin10Basis {
    pub fn new() -> Self {
        let lambda = [
            FormalCharacter::trivial(5),
            spin10_lambda(1),
            spin10_lambda(2),
            spin10_lambda(3),
            spin10_lambda(4),
        ];
        let ext2_lambda2 = lambda[2]
            .exterior_power(2)
            .expect("λ2 is effective");
        Spin10Basis {
            lambda,
            delta_plus: spin10_half_spin(true),
            delta_minus: spin10_half_spin(false),
            ext2_lambda2,
        }
    }
}

impl Default for Spin10Basis {
    fn default() -> Self {
        Spin10Basis::new()
    }
}

// ---------------------------------------------------------------------------
// Spin(10)-level identities.
// ---------------------------------------------------------------------------

/// Outcome of checking a character identity `computed == expected`, keeping
/// both sides and their difference as the witness.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub location: &'static str,
    pub holds: bool,
    pub computed: FormalCharacter,
    pub expected: FormalCharacter,
}

impl IdentityCheck {
    pub fn new(
        id: &'static str,
        location: &'static str,
        computed: FormalCharacter,
        expected: FormalCharacter,
    ) -> Self {
        let holds = computed == expected;
        IdentityCheck {
            id,
            location,
            holds,
            computed,
            expected,
        }
    }

    pub fn difference(&self) -> FormalCharacter {
        self.computed
            .sub(&self.expected)
            .expect("identity sides share an ambient dimension")
    }

    /// Witness text: the computed side on success, the nonzero difference
    /// on failure.
    pub fn witness(&self) -> String {
        if self.holds {
            self.computed.to_canonical_text()
        } else {
            format!(
                "difference (computed - expected):\n{}",
                self.difference().to_canonical_text()
            )
        }
    }
}

/// Checks `λ1·λ3 = Λ²(λ2) + λ4` in the Spin(10) character ring.
pub fn verify_lambda13_relation() -> IdentityCheck {
    let basis = Spin10Basis::new();
    let lhs = basis.lambda[1]
        .multiply(&basis.lambda[3])
        .expect("same torus");
    let rhs = basis
        .ext2_lambda2
        .add(&basis.lambda[4])
        .expect("same torus");
    IdentityCheck::new("lemma-4.1", "Lemma 4.1", lhs, rhs)
}

/// Checks the Clifford-multiplication relation `Δ⁺·Δ⁻ = 1 + λ2 + λ4`.
pub fn verify_clifford_relation() -> IdentityCheck {
    let basis = Spin10Basis::new();
    let lhs = basis
        .delta_plus
        .multiply(&basis.delta_minus)
        .expect("same torus");
    let rhs = FormalCharacter::trivial(5)
        .add(&basis.lambda[2])
        .and_then(|c| c.add(&basis.lambda[4]))
        .expect("same torus");
    IdentityCheck::new("clifford", "Lemma 4.1 proof (spinor route)", lhs, rhs)
}

/// One row of the weight-type table for the three 1200/990/210-dimensional
/// characters entering the λ1·λ3 relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTypeRow {
    pub label: &'static str,
    pub weight_count: usize,
    pub mult_ext2_u2: Int,
    pub mult_u4: Int,
    pub mult_u1_u3: Int,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WeightType {
    FourUnits,
    TwoAndTwoUnits,
    TwoUnits,
    OneDouble,
    Zero,
}

impl WeightType {
    const ALL: [WeightType; 5] = [
        WeightType::FourUnits,
        WeightType::TwoAndTwoUnits,
        WeightType::TwoUnits,
        WeightType::OneDouble,
        WeightType::Zero,
    ];

    fn label(self) -> &'static str {
        match self {
            WeightType::FourUnits => "±xi±xj±xk±xl",
            WeightType::TwoAndTwoUnits => "±2xi±xj±xk",
            WeightType::TwoUnits => "±xi±xj",
            WeightType::OneDouble => "±2xi",
            WeightType::Zero => "0",
        }
    }

    /// Absolute coordinate pattern, descending.
    fn pattern(self) -> [i64; 5] {
        match self {
            WeightType::FourUnits => [1, 1, 1, 1, 0],
            WeightType::TwoAndTwoUnits => [2, 1, 1, 0, 0],
            WeightType::TwoUnits => [1, 1, 0, 0, 0],
            WeightType::OneDouble => [2, 0, 0, 0, 0],
            WeightType::Zero => [0, 0, 0, 0, 0],
        }
    }

    fn classify(w: &WeightVector) -> Option<WeightType> {
        let abs = w.abs_sorted();
        WeightType::ALL.into_iter().find(|t| {
            t.pattern()
                .iter()
                .zip(&abs)
                .all(|(&p, a)| *a == Rational::from_integer(p.into()))
        })
    }

    /// Every weight of this type, enumerated combinatorially.
    fn members(self) -> Vec<WeightVector> {
        let signs = [1i64, -1];
        let mut out = Vec::new();
        match self {
            WeightType::Zero => out.push(WeightVector::zero(5)),
            WeightType::OneDouble => {
                for i in 0..5 {
                    for s in signs {
                        let mut c = [0i64; 5];
                        c[i] = 2 * s;
                        out.push(WeightVector::integers(&c));
                    }
                }
            }
            WeightType::TwoUnits => {
                for i in 0..5 {
                    for j in (i + 1)..5 {
                        for si in signs {
                            for sj in signs {
                                let mut c = [0i64; 5];
                                c[i] = si;
                                c[j] = sj;
                                out.push(WeightVector::integers(&c));
                            }
                        }
                    }
                }
            }
            WeightType::TwoAndTwoUnits => {
                for d in 0..5 {
                    for sd in signs {
                        for i in 0..5 {
                            for j in (i + 1)..5 {
                                if i == d || j == d {
                                    continue;
                                }
                                for si in signs {
                                    for sj in signs {
                                        let mut c = [0i64; 5];
                                        c[d] = 2 * sd;
                                        c[i] = si;
                                        c[j] = sj;
                                        out.push(WeightVector::integers(&c));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            WeightType::FourUnits => {
                for z in 0..5 {
                    for mask in 0u32..16 {
                        let mut c = [0i64; 5];
                        let mut bit = 0;
                        for pos in 0..5 {
                            if pos == z {
                                continue;
                            }
                            c[pos] = if mask >> bit & 1 == 1 { -1 } else { 1 };
                            bit += 1;
                        }
                        out.push(WeightVector::integers(&c));
                    }
                }
            }
        }
        out
    }
}

/// Computes the weight-type table of `Λ²(U2)`, `U4` and `U1⊗U3`: for each
/// of the five Weyl-orbit types, the orbit size and the (constant)
/// multiplicity of its weights in the three characters.
pub fn table2_rows() -> Result<Vec<WeightTypeRow>, CalcError> {
    let basis = Spin10Basis::new();
    let ext2_u2 = &basis.ext2_lambda2;
    let u4 = &basis.lambda[4];
    let u1_u3 = basis.lambda[1].multiply(&basis.lambda[3])?;

    // every supported weight must fall into one of the five types
    for chi in [ext2_u2, u4, &u1_u3] {
        for (w, _) in chi.terms() {
            if WeightType::classify(w).is_none() {
                return Err(CalcError::UnclassifiedWeight {
                    weight: w.to_string(),
                });
            }
        }
    }

    let mut rows = Vec::new();
    for t in WeightType::ALL {
        let members = t.members();
        let mut mults: Vec<Int> = Vec::new();
        for chi in [ext2_u2, u4, &u1_u3] {
            let first = chi.multiplicity(&members[0]);
            for w in &members[1..] {
                let m = chi.multiplicity(w);
                if m != first {
                    return Err(CalcError::NonConstantType {
                        label: t.label().to_string(),
                        first,
                        second: m,
                    });
                }
            }
            mults.push(first);
        }
        rows.push(WeightTypeRow {
            label: t.label(),
            weight_count: members.len(),
            mult_ext2_u2: mults[0].clone(),
            mult_u4: mults[1].clone(),
            mult_u1_u3: mults[2].clone(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e6() -> RootSystem {
        RootSystem::build(RootSystemKind::E6)
    }

    fn d5() -> RootSystem {
        RootSystem::build(RootSystemKind::D5)
    }

    fn big(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn freudenthal_matches_direct_constructions_on_d5() {
        let rs = d5();
        for (node, direct) in [
            (1, spin10_lambda(1)),
            (2, spin10_lambda(2)),
            (3, spin10_lambda(3)),
            (4, spin10_half_spin(false)),
            (5, spin10_half_spin(true)),
        ] {
            let hw = rs.dominant(rs.fundamental_weight(node).clone()).unwrap();
            let chi = irreducible_character(&rs, &hw).unwrap();
            assert_eq!(chi, direct, "node {node}");
        }
        // Λ⁴(C^10) is irreducible with highest weight x1+x2+x3+x4
        let hw = rs
            .dominant(WeightVector::integers(&[1, 1, 1, 1, 0]))
            .unwrap();
        assert_eq!(irreducible_character(&rs, &hw).unwrap(), spin10_lambda(4));
    }

    #[test]
    fn freudenthal_zero_weight_multiplicity_of_e6_adjoint() {
        let rs = e6();
        let hw = rs.dominant(rs.fundamental_weight(5).clone()).unwrap();
        let mults = dominant_weight_multiplicities(&rs, &hw).unwrap();
        assert_eq!(mults.get(&WeightVector::zero(8)), Some(&big(6)));
        let chi = irreducible_character(&rs, &hw).unwrap();
        assert_eq!(chi.dimension(), big(78));
        // the nonzero weights of the adjoint are exactly the 72 roots
        for alpha in rs.all_roots() {
            assert_eq!(chi.multiplicity(alpha), big(1));
        }
    }

    #[test]
    fn e6_minuscule_characters_are_single_orbits() {
        let rs = e6();
        for node in [1usize, 6] {
            let hw = rs.dominant(rs.fundamental_weight(node).clone()).unwrap();
            let chi = irreducible_character(&rs, &hw).unwrap();
            assert_eq!(chi.dimension(), big(27));
            assert_eq!(chi.support_size(), 27);
            assert!(chi.terms().all(|(_, m)| *m == big(1)));
        }
    }

    #[test]
    fn e8_scale_is_guarded() {
        let rs = RootSystem::build(RootSystemKind::E8);
        let hw = rs
            .dominant(WeightVector::integers(&[0, 0, 0, 0, 0, 0, 1, 1]))
            .unwrap();
        assert_eq!(
            irreducible_character(&rs, &hw).unwrap_err(),
            CalcError::E8Scale
        );
    }

    #[test]
    fn e8_adjoint_character_is_weyl_invariant() {
        let chi = adjoint_character_e8();
        let rs = RootSystem::build(RootSystemKind::E8);
        assert!(is_weyl_invariant(&rs, &chi));
        assert_eq!(chi.multiplicity(&WeightVector::zero(8)), big(8));
    }

    #[test]
    fn decompose_round_trips_a_known_sum() {
        let rs = d5();
        let pi1 = rs.dominant(rs.fundamental_weight(1).clone()).unwrap();
        let pi2 = rs.dominant(rs.fundamental_weight(2).clone()).unwrap();
        let chi = irreducible_character(&rs, &pi1)
            .unwrap()
            .scaled(&big(2))
            .add(&irreducible_character(&rs, &pi2).unwrap())
            .unwrap();
        let dec = decompose(&rs, &chi).unwrap();
        assert_eq!(dec.multiplicity(&pi1), big(2));
        assert_eq!(dec.multiplicity(&pi2), big(1));
        assert_eq!(dec.len(), 2);
        assert_eq!(assemble(&rs, &dec).unwrap(), chi);
    }

    #[test]
    fn decompose_rejects_non_invariant_characters() {
        let rs = d5();
        let chi =
            FormalCharacter::from_weights(5, [WeightVector::integers(&[1, 0, 0, 0, 0])]).unwrap();
        match decompose(&rs, &chi) {
            Err(CalcError::NotWeylInvariant { .. }) => {}
            other => panic!("expected invariance error, got {other:?}"),
        }
    }

    #[test]
    fn decompose_handles_virtual_characters() {
        let rs = d5();
        let pi1 = rs.dominant(rs.fundamental_weight(1).clone()).unwrap();
        let chi = irreducible_character(&rs, &pi1).unwrap().neg();
        let dec = decompose(&rs, &chi).unwrap();
        assert_eq!(dec.multiplicity(&pi1), big(-1));
        assert_eq!(dec.len(), 1);
    }

    #[test]
    fn exterior_square_of_adjoint_splits_as_945_plus_45() {
        let rs = d5();
        let basis = Spin10Basis::new();
        let dec = decompose(&rs, &basis.ext2_lambda2).unwrap();
        let big_part = rs
            .dominant(WeightVector::integers(&[2, 1, 1, 0, 0]))
            .unwrap();
        let pi2 = rs.dominant(rs.fundamental_weight(2).clone()).unwrap();
        assert_eq!(dec.multiplicity(&big_part), big(1));
        assert_eq!(dec.multiplicity(&pi2), big(1));
        assert_eq!(dec.len(), 2);
        assert_eq!(basis.ext2_lambda2.dimension(), big(990));
    }

    #[test]
    fn lambda13_relation_holds() {
        let check = verify_lambda13_relation();
        assert!(check.holds, "difference:\n{}", check.difference());
        assert_eq!(check.computed.dimension(), big(1200));
    }

    #[test]
    fn clifford_relation_holds() {
        let check = verify_clifford_relation();
        assert!(check.holds, "difference:\n{}", check.difference());
        assert_eq!(check.computed.dimension(), big(256));
        // zero weight appears 16 times on both sides
        assert_eq!(check.computed.multiplicity(&WeightVector::zero(5)), big(16));
    }

    #[test]
    fn weight_type_table() {
        let rows = table2_rows().unwrap();
        let expected: Vec<(&str, usize, i64, i64, i64)> = vec![
            ("±xi±xj±xk±xl", 80, 3, 1, 4),
            ("±2xi±xj±xk", 240, 1, 0, 1),
            ("±xi±xj", 40, 11, 3, 14),
            ("±2xi", 10, 4, 0, 4),
            ("0", 1, 30, 10, 40),
        ];
        assert_eq!(rows.len(), expected.len());
        for (row, (label, count, a, b, c)) in rows.iter().zip(&expected) {
            assert_eq!(row.label, *label);
            assert_eq!(row.weight_count, *count, "type {label}");
            assert_eq!(row.mult_ext2_u2, big(*a), "type {label}");
            assert_eq!(row.mult_u4, big(*b), "type {label}");
            assert_eq!(row.mult_u1_u3, big(*c), "type {label}");
            // column consistency: U1⊗U3 = Λ²(U2) + U4 holds row by row
            assert_eq!(row.mult_u1_u3, &row.mult_ext2_u2 + &row.mult_u4);
        }
        // total dimension bookkeeping: Σ count·mult
        let total = |f: fn(&WeightTypeRow) -> &Int| -> Int {
            rows.iter().map(|r| f(r) * Int::from(r.weight_count as i64)).sum()
        };
        assert_eq!(total(|r| &r.mult_ext2_u2), big(990));
        assert_eq!(total(|r| &r.mult_u4), big(210));
        assert_eq!(total(|r| &r.mult_u1_u3), big(1200));
    }

    #[test]
    fn spinor_constructions() {
        let dp = spin10_half_spin(true);
        let dm = spin10_half_spin(false);
        // the half-spin characters are swapped by duality
        assert_eq!(dp.conjugate(), dm);
        // highest weights sit at the spin nodes
        let d5 = d5();
        assert_eq!(dp.multiplicity(d5.fundamental_weight(5)), big(1));
        assert_eq!(dm.multiplicity(d5.fundamental_weight(4)), big(1));
    }
}
