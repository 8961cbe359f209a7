//! Restriction of characters along the chain
//! `T̃8 → Spin(10)·S¹-torus → Spin(10)-torus`, and the machine checks of
//! the branching identities for the E6 classes α, β, γ and their exterior
//! squares.
//!
//! Weights upstairs live in 8 coordinates; the Spin(10)·S¹ torus uses 6
//! coordinates, the sixth being the ξ-degree; the Spin(10) torus keeps the
//! first five.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::character::{CharError, FormalCharacter};
use crate::charcalc::{
    self, decompose, irreducible_character, IdentityCheck, Spin10Basis,
};
use crate::formulas::{self, with_xi_degree, xi_power};
use crate::rootdata::{DominantWeight, RootSystem, RootSystemKind};
use crate::weight::{WeightMap, WeightVector};
use crate::{Int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BranchError {
    #[error("weight {weight} has non-integral xi-degree {degree}")]
    NonIntegralXiDegree { weight: String, degree: String },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Calc(#[from] crate::charcalc::CalcError),
}

/// The three restriction maps on weight coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestrictionMapKind {
    /// `(c1..c8) ↦ (c1..c5, 2(c6+c7+c8))`: the 8-coordinate torus onto the
    /// Spin(10)·S¹ torus.
    E8TorusToSpin10S1,
    /// `(c1..c6) ↦ (c1..c5)`: forget the ξ-degree.
    Spin10S1ToSpin10,
    /// Same formula as `E8TorusToSpin10S1`, applied to E6 weights (which
    /// satisfy `c6 = c7 = c8`).
    E6WeightToSpin10S1,
}

pub fn restriction_matrix(kind: RestrictionMapKind) -> WeightMap {
    match kind {
        RestrictionMapKind::E8TorusToSpin10S1 | RestrictionMapKind::E6WeightToSpin10S1 => {
            WeightMap::from_integers(&[
                &[1, 0, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 0, 2, 2, 2],
            ])
        }
        RestrictionMapKind::Spin10S1ToSpin10 => WeightMap::from_integers(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
        ]),
    }
}

pub fn restrict_character(
    chi: &FormalCharacter,
    kind: RestrictionMapKind,
) -> Result<FormalCharacter, CharError> {
    chi.project(&restriction_matrix(kind))
}

/// Full restriction of an E6 character to the Spin(10) torus (both maps).
pub fn restrict_e6_to_spin10(chi8: &FormalCharacter) -> Result<FormalCharacter, CharError> {
    restrict_character(
        &restrict_character(chi8, RestrictionMapKind::E6WeightToSpin10S1)?,
        RestrictionMapKind::Spin10S1ToSpin10,
    )
}

/// A character of Spin(10)·S¹ decomposed into irreducible Spin(10)
/// summands with their ξ-degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spin10S1Decomposition {
    terms: BTreeMap<(i64, DominantWeight), Int>,
}

impl Spin10S1Decomposition {
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, DominantWeight), &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, degree: i64, hw: &DominantWeight) -> Int {
        self.terms
            .get(&(degree, hw.clone()))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    /// Renders lines `mult * V(hw) * xi^d` in (degree, weight) order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for ((d, hw), m) in &self.terms {
            out.push_str(&format!("{} * V{} * xi^{}\n", m, hw.coords(), d));
        }
        out
    }
}

/// Extracts the integer ξ-degree (sixth coordinate) of a 6-coordinate
/// weight.
fn xi_degree(w: &WeightVector) -> Result<i64, BranchError> {
    let d = w.coord(5);
    if !d.is_integer() {
        return Err(BranchError::NonIntegralXiDegree {
            weight: w.to_string(),
            degree: d.to_string(),
        });
    }
    let d = d.to_integer();
    i64::try_from(&d).map_err(|_| BranchError::NonIntegralXiDegree {
        weight: w.to_string(),
        degree: d.to_string(),
    })
}

/// Slices a Spin(10)·S¹ character by ξ-degree and decomposes every slice
/// over Spin(10).  The result reassembles exactly to the input (checked).
pub fn decompose_over_spin10_s1(
    chi6: &FormalCharacter,
) -> Result<Spin10S1Decomposition, BranchError> {
    assert_eq!(chi6.ambient_dim(), 6);
    let rs = RootSystem::build(RootSystemKind::D5);
    let mut slices: BTreeMap<i64, FormalCharacter> = BTreeMap::new();
    for (w, m) in chi6.terms() {
        let d = xi_degree(w)?;
        let w5 = WeightVector::new(w.coords()[..5].to_vec());
        slices
            .entry(d)
            .or_insert_with(|| FormalCharacter::zero(5))
            .add_term(w5, m.clone());
    }
    let mut terms = BTreeMap::new();
    for (d, slice) in &slices {
        let dec = decompose(&rs, slice)?;
        for (hw, m) in dec.terms() {
            terms.insert((*d, hw.clone()), m.clone());
        }
    }
    let result = Spin10S1Decomposition { terms };
    // round trip: the summands rebuild the input exactly
    let mut rebuilt = FormalCharacter::zero(6);
    for ((d, hw), m) in &result.terms {
        let irr = irreducible_character(&rs, hw)?;
        rebuilt = rebuilt.add(&with_xi_degree(&irr, *d).scaled(m))?;
    }
    assert_eq!(&rebuilt, chi6, "Spin(10)·S¹ decomposition must reassemble");
    Ok(result)
}

/// Weights of characters restricted from E6 (or from the 8-coordinate
/// torus) must be trivial on the order-4 kernel element of
/// `Spin(10) × S¹ → Spin(10)·S¹`; on a weight `(c1..c5, d)` this is the
/// congruence `2(c1+...+c5) + d ≡ 0 (mod 4)`.
///
/// Returns the weights violating the congruence (empty = all good).  Used
/// as a diagnostic on restricted characters, never as a precondition.
pub fn kernel_congruence_violations(chi6: &FormalCharacter) -> Result<Vec<WeightVector>, BranchError> {
    let mut bad = Vec::new();
    for (w, _) in chi6.terms() {
        let d = xi_degree(w)?;
        let two_sum = Rational::from_integer(2.into()) * w.coords()[..5].iter().sum::<Rational>();
        if !two_sum.is_integer() {
            bad.push(w.clone());
            continue;
        }
        let total = two_sum.to_integer() + Int::from(d);
        if (total % Int::from(4)) != Int::zero() {
            bad.push(w.clone());
        }
    }
    Ok(bad)
}

// ---------------------------------------------------------------------------
// Identity checks.
// ---------------------------------------------------------------------------

/// Half-spin character of Spin(16): the 128 weights `(±1/2)^8` with an
/// even (`positive`) or odd number of minus signs.
pub fn spin16_half_spin(positive: bool) -> FormalCharacter {
    let mut chi = FormalCharacter::zero(8);
    for mask in 0u32..256 {
        let minus = mask.count_ones() as usize;
        if (minus % 2 == 0) != positive {
            continue;
        }
        let coords: Vec<(i64, i64)> = (0..8)
            .map(|b| (if mask >> b & 1 == 1 { -1 } else { 1 }, 2))
            .collect();
        chi.add_term(WeightVector::rationals(&coords), Int::from(1));
    }
    assert_eq!(chi.dimension(), Int::from(128));
    chi
}

fn e6_fundamental_character(rs: &RootSystem, node: usize) -> FormalCharacter {
    let hw = rs
        .dominant(rs.fundamental_weight(node).clone())
        .expect("fundamental weights are dominant");
    irreducible_character(rs, &hw).expect("E6 characters are supported")
}

/// Restriction of the Spin(16) half-spin character Δ₈⁺ to Spin(10)·S¹:
/// `Δ⁺ξ³ + Δ⁻ξ⁻³ + 3Δ⁺ξ⁻¹ + 3Δ⁻ξ`.
pub fn verify_delta8_restriction() -> Result<IdentityCheck, BranchError> {
    let basis = Spin10Basis::new();
    let lhs = restrict_character(&spin16_half_spin(true), RestrictionMapKind::E8TorusToSpin10S1)?;
    let rhs = with_xi_degree(&basis.delta_plus, 3)
        .add(&with_xi_degree(&basis.delta_minus, -3))?
        .add(&with_xi_degree(&basis.delta_plus, -1).scaled(&Int::from(3)))?
        .add(&with_xi_degree(&basis.delta_minus, 1).scaled(&Int::from(3)))?;
    Ok(IdentityCheck::new(
        "delta8-restriction",
        "Section 3 (half-spin branching)",
        lhs,
        rhs,
    ))
}

/// The monomial `u1···u8` (the weight `(1/2,...,1/2)`) restricts to
/// `u1···u5·ξ³`.
pub fn verify_monomial_restriction() -> IdentityCheck {
    let upstairs = FormalCharacter::from_weights(
        8,
        [WeightVector::rationals(&[
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
        ])],
    )
    .expect("single weight");
    let lhs = restrict_character(&upstairs, RestrictionMapKind::E8TorusToSpin10S1)
        .expect("projection applies");
    let expected = FormalCharacter::from_weights(
        6,
        [WeightVector::rationals(&[
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (3, 1),
        ])],
    )
    .expect("single weight");
    IdentityCheck::new(
        "u-monomial",
        "Section 3 (torus coordinates)",
        lhs,
        expected,
    )
}

/// Restrictions of the two 27-dimensional E6 characters to Spin(10)·S¹:
/// `χ(ϖ1) ↦ V = λ1ξ⁻² + Δ⁻ξ + ξ⁴` and `χ(ϖ6) ↦ V′ = λ1ξ² + Δ⁺ξ⁻¹ + ξ⁻⁴`.
pub fn verify_v_and_v_prime() -> Result<[IdentityCheck; 2], BranchError> {
    let rs = RootSystem::build(RootSystemKind::E6);
    let basis = Spin10Basis::new();
    let v = restrict_character(
        &e6_fundamental_character(&rs, 1),
        RestrictionMapKind::E6WeightToSpin10S1,
    )?;
    let v_expected = formulas::rho_prime_alpha().character_over_spin10_s1(&basis);
    let vp = restrict_character(
        &e6_fundamental_character(&rs, 6),
        RestrictionMapKind::E6WeightToSpin10S1,
    )?;
    let vp_expected = formulas::rho_prime_beta().character_over_spin10_s1(&basis);
    Ok([
        IdentityCheck::new("eq-3.4-V", "Equation (3.4), class V", v, v_expected),
        IdentityCheck::new("eq-3.4-Vprime", "Equation (3.4), class V'", vp, vp_expected),
    ])
}

/// Restriction of the E8 adjoint to Spin(10)·S¹:
/// `(so(10)⊕R)⊗C + Δ⁺ξ³ + Δ⁻ξ⁻³ + 8 + 3(V + V′)`.
pub fn verify_e8_adjoint_restriction() -> Result<IdentityCheck, BranchError> {
    let basis = Spin10Basis::new();
    let lhs = restrict_character(
        &charcalc::adjoint_character_e8(),
        RestrictionMapKind::E8TorusToSpin10S1,
    )?;
    // Lie(Spin(10)·S¹)⊗C: the 45-dimensional adjoint plus the S¹ factor,
    // all in ξ-degree 0.
    let lie_part = with_xi_degree(&basis.lambda[2], 0).add(&xi_power(0))?;
    let e6_part = lie_part
        .add(&with_xi_degree(&basis.delta_plus, 3))?
        .add(&with_xi_degree(&basis.delta_minus, -3))?;
    let v = formulas::rho_prime_alpha().character_over_spin10_s1(&basis);
    let vp = formulas::rho_prime_beta().character_over_spin10_s1(&basis);
    let rhs = e6_part
        .add(&xi_power(0).scaled(&Int::from(8)))?
        .add(&v.add(&vp)?.scaled(&Int::from(3)))?;
    Ok(IdentityCheck::new(
        "eq-3.5",
        "Equation (3.5)",
        lhs,
        rhs,
    ))
}

/// Restriction of the E6 adjoint character to Spin(10)·S¹:
/// `1 + λ2 + Δ⁺ξ³ + Δ⁻ξ⁻³`.
pub fn verify_e6_adjoint_restriction() -> Result<IdentityCheck, BranchError> {
    let rs = RootSystem::build(RootSystemKind::E6);
    let basis = Spin10Basis::new();
    let lhs = restrict_character(
        &e6_fundamental_character(&rs, 5),
        RestrictionMapKind::E6WeightToSpin10S1,
    )?;
    let rhs = formulas::rho_prime_gamma().character_over_spin10_s1(&basis);
    Ok(IdentityCheck::new(
        "eq-4.2",
        "Equation (4.2)",
        lhs,
        rhs,
    ))
}

/// The six ungraded restriction identities for α, β, γ, Λ²α, Λ²β, Λ²γ
/// over Spin(10), plus the λ-ring cross-check that restricting before or
/// after the exterior square agrees.
pub struct Prop42Verification {
    pub parts: Vec<IdentityCheck>,
    pub cross_check: IdentityCheck,
}

impl Prop42Verification {
    pub fn all_hold(&self) -> bool {
        self.parts.iter().all(|c| c.holds) && self.cross_check.holds
    }
}

pub fn verify_restriction_identities() -> Result<Prop42Verification, BranchError> {
    let rs = RootSystem::build(RootSystemKind::E6);
    let basis = Spin10Basis::new();
    let alpha = e6_fundamental_character(&rs, 1);
    let beta = e6_fundamental_character(&rs, 6);
    let gamma = e6_fundamental_character(&rs, 5);

    let r = restrict_e6_to_spin10;
    let mut parts = Vec::new();
    let cases: [(&'static str, &'static str, FormalCharacter, formulas::SpinExpr); 6] = [
        (
            "prop-4.2-i",
            "Proposition 4.2(i)",
            r(&alpha)?,
            formulas::rho_alpha(),
        ),
        (
            "prop-4.2-ii",
            "Proposition 4.2(ii)",
            r(&beta)?,
            formulas::rho_beta(),
        ),
        (
            "prop-4.2-iii",
            "Proposition 4.2(iii)",
            r(&gamma)?,
            formulas::rho_gamma(),
        ),
        (
            "prop-4.2-iv",
            "Proposition 4.2(iv)",
            r(&alpha)?.exterior_power(2)?,
            formulas::rho_ext2_alpha(),
        ),
        (
            "prop-4.2-v",
            "Proposition 4.2(v)",
            r(&beta)?.exterior_power(2)?,
            formulas::rho_ext2_beta(),
        ),
        (
            "prop-4.2-vi",
            "Proposition 4.2(vi)",
            r(&gamma)?.exterior_power(2)?,
            formulas::rho_ext2_gamma(),
        ),
    ];
    for (id, loc, lhs, expr) in cases {
        let rhs = expr.character_over_spin10(&basis);
        parts.push(IdentityCheck::new(id, loc, lhs, rhs));
    }

    // restricting then squaring equals squaring then restricting
    let cross = IdentityCheck::new(
        "lambda-ring-crosscheck",
        "Proposition 4.2 (exterior square commutes with restriction)",
        r(&alpha.exterior_power(2)?)?,
        r(&alpha)?.exterior_power(2)?,
    );

    Ok(Prop42Verification {
        parts,
        cross_check: cross,
    })
}

/// The three graded exterior-square identities over Spin(10)·S¹.
pub fn verify_graded_ext2_identities() -> Result<Vec<IdentityCheck>, BranchError> {
    let rs = RootSystem::build(RootSystemKind::E6);
    let basis = Spin10Basis::new();
    let restrict = |node: usize| -> Result<FormalCharacter, BranchError> {
        Ok(restrict_character(
            &e6_fundamental_character(&rs, node),
            RestrictionMapKind::E6WeightToSpin10S1,
        )?)
    };
    let cases: [(&'static str, &'static str, usize, formulas::SpinExpr); 3] = [
        ("eq-4.3", "Equation (4.3)", 1, formulas::rho_prime_ext2_alpha()),
        ("eq-4.4", "Equation (4.4)", 6, formulas::rho_prime_ext2_beta()),
        ("eq-4.5", "Equation (4.5)", 5, formulas::rho_prime_ext2_gamma()),
    ];
    let mut out = Vec::new();
    for (id, loc, node, expr) in cases {
        let lhs = restrict(node)?.exterior_power(2)?;
        let rhs = expr.character_over_spin10_s1(&basis);
        out.push(IdentityCheck::new(id, loc, lhs, rhs));
    }
    Ok(out)
}

/// ξ-degree histogram of a Spin(10)·S¹ character: degree → dimension of
/// the slice.
pub fn xi_histogram(chi6: &FormalCharacter) -> Result<BTreeMap<i64, Int>, BranchError> {
    let mut out: BTreeMap<i64, Int> = BTreeMap::new();
    for (w, m) in chi6.terms() {
        let d = xi_degree(w)?;
        let e = out.entry(d).or_insert_with(Int::zero);
        *e += m;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}
