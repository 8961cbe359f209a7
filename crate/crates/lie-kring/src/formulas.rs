//! Symbolic right-hand sides of the restriction identities.
//!
//! Each identity expresses the restriction of an E6 class to
//! Spin(10)·S¹ (or to Spin(10)) as a polynomial expression in the basic
//! Spin(10) classes λ1..λ4, Δ⁺, Δ⁻ and powers of the S¹ character ξ.
//! The expressions are stored once as formal terms and evaluated in two
//! different rings: as formal characters of the Spin(10)(·S¹) torus, and —
//! after the restriction identities have been machine-verified — as
//! univariate polynomials in the quotient ring `B = Z[λ1]`.
//!
//! Keeping a single symbolic source for both consumers is what ties the
//! quotient-ring derivation to the verified character identities.


use crate::character::FormalCharacter;
use crate::charcalc::Spin10Basis;
use crate::weight::WeightVector;
use crate::{Int, Rational};

/// Generator symbols of the Spin(10) representation ring used by the
/// restriction identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinSymbol {
    Lambda1,
    Lambda2,
    Lambda3,
    Lambda4,
    DeltaPlus,
    DeltaMinus,
    /// Λ²(λ2); appears in the graded exterior-square identity for the
    /// adjoint class.
    Ext2Lambda2,
}

/// One product term `coeff · (product of symbols) · ξ^xi`.
#[derive(Clone, Debug)]
pub struct SpinTerm {
    pub coeff: i64,
    pub factors: Vec<SpinSymbol>,
    pub xi: i64,
}

/// A formal integer combination of products of Spin(10) generators and
/// ξ-powers.
#[derive(Clone, Debug)]
pub struct SpinExpr {
    pub terms: Vec<SpinTerm>,
}

/// Shorthand used by the formula tables below.
fn term(coeff: i64, factors: &[SpinSymbol], xi: i64) -> SpinTerm {
    SpinTerm {
        coeff,
        factors: factors.to_vec(),
        xi,
    }
}

impl SpinExpr {
    pub fn new(terms: Vec<SpinTerm>) -> Self {
        SpinExpr { terms }
    }

    /// Evaluates to a 5-coordinate Spin(10) character, sending ξ to 1.
    pub fn character_over_spin10(&self, basis: &Spin10Basis) -> FormalCharacter {
        self.character(basis, false)
    }

    /// Evaluates to a 6-coordinate Spin(10)·S¹ character; the sixth
    /// coordinate is the ξ-degree.
    pub fn character_over_spin10_s1(&self, basis: &Spin10Basis) -> FormalCharacter {
        self.character(basis, true)
    }

    fn character(&self, basis: &Spin10Basis, graded: bool) -> FormalCharacter {
        let dim = if graded { 6 } else { 5 };
        let mut acc = FormalCharacter::zero(dim);
        for t in &self.terms {
            let mut prod = FormalCharacter::trivial(5);
            for f in &t.factors {
                prod = prod
                    .multiply(symbol_character(basis, *f))
                    .expect("basis characters share the Spin(10) torus");
            }
            let prod = if graded { with_xi_degree(&prod, t.xi) } else { prod };
            acc = acc
                .add(&prod.scaled(&Int::from(t.coeff)))
                .expect("terms share an ambient dimension");
        }
        acc
    }

    /// Evaluates the expression under a substitution of the generator
    /// symbols, sending ξ to 1.  Used with the solved images in `Z[t]`.
    pub fn eval_in_ring<R, F>(&self, one: R, sub: F) -> R
    where
        R: Clone + std::ops::Add<R, Output = R> + std::ops::Mul<R, Output = R>,
        F: Fn(SpinSymbol) -> R,
        R: std::ops::Mul<i64, Output = R>,
    {
        let mut acc: Option<R> = None;
        for t in &self.terms {
            let mut prod = one.clone();
            for f in &t.factors {
                prod = prod * sub(*f);
            }
            let scaled = prod * t.coeff;
            acc = Some(match acc {
                None => scaled,
                Some(a) => a + scaled,
            });
        }
        acc.expect("expressions are nonempty")
    }
}

fn symbol_character<'a>(basis: &'a Spin10Basis, s: SpinSymbol) -> &'a FormalCharacter {
    match s {
        SpinSymbol::Lambda1 => &basis.lambda[1],
        SpinSymbol::Lambda2 => &basis.lambda[2],
        SpinSymbol::Lambda3 => &basis.lambda[3],
        SpinSymbol::Lambda4 => &basis.lambda[4],
        SpinSymbol::DeltaPlus => &basis.delta_plus,
        SpinSymbol::DeltaMinus => &basis.delta_minus,
        SpinSymbol::Ext2Lambda2 => &basis.ext2_lambda2,
    }
}

/// Appends the ξ-degree `d` as a sixth coordinate to every weight.
pub fn with_xi_degree(chi5: &FormalCharacter, d: i64) -> FormalCharacter {
    assert_eq!(chi5.ambient_dim(), 5);
    let mut out = FormalCharacter::zero(6);
    let d = Rational::from_integer(d.into());
    for (w, m) in chi5.terms() {
        let mut coords = w.coords().to_vec();
        coords.push(d.clone());
        out.add_term(WeightVector::new(coords), m.clone());
    }
    out
}

/// The pure S¹ character ξ^d as a 6-coordinate character.
pub fn xi_power(d: i64) -> FormalCharacter {
    with_xi_degree(&FormalCharacter::trivial(5), d)
}

use SpinSymbol::*;

/// Restriction of the 27-dimensional class α to Spin(10):
/// `1 + λ1 + Δ⁻`.
///
/// Note the spinor: the graded form of this restriction (see
/// [`rho_prime_alpha`]) puts Δ⁻ in ξ-degree 1, and forgetting the grading
/// therefore lands on Δ⁻ here.
pub fn rho_alpha() -> SpinExpr {
    SpinExpr::new(vec![term(1, &[], 0), term(1, &[Lambda1], 0), term(1, &[DeltaMinus], 0)])
}

/// Restriction of the conjugate 27-dimensional class β to Spin(10):
/// `1 + λ1 + Δ⁺`.
pub fn rho_beta() -> SpinExpr {
    SpinExpr::new(vec![term(1, &[], 0), term(1, &[Lambda1], 0), term(1, &[DeltaPlus], 0)])
}

/// Restriction of the adjoint class γ to Spin(10):
/// `1 + λ2 + Δ⁺ + Δ⁻`.
pub fn rho_gamma() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[], 0),
        term(1, &[Lambda2], 0),
        term(1, &[DeltaPlus], 0),
        term(1, &[DeltaMinus], 0),
    ])
}

/// Restriction of Λ²α to Spin(10):
/// `λ2 + λ3 + λ1·Δ⁻ + λ1 + Δ⁻`.
pub fn rho_ext2_alpha() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda2], 0),
        term(1, &[Lambda3], 0),
        term(1, &[Lambda1, DeltaMinus], 0),
        term(1, &[Lambda1], 0),
        term(1, &[DeltaMinus], 0),
    ])
}

/// Restriction of Λ²β to Spin(10):
/// `λ2 + λ3 + λ1·Δ⁺ + λ1 + Δ⁺`.
pub fn rho_ext2_beta() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda2], 0),
        term(1, &[Lambda3], 0),
        term(1, &[Lambda1, DeltaPlus], 0),
        term(1, &[Lambda1], 0),
        term(1, &[DeltaPlus], 0),
    ])
}

/// Restriction of Λ²γ to Spin(10):
/// `1 + 2λ2 + (1 + λ2)(Δ⁺ + Δ⁻) + 2λ3 + λ1·λ3`.
pub fn rho_ext2_gamma() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[], 0),
        term(2, &[Lambda2], 0),
        term(1, &[DeltaPlus], 0),
        term(1, &[DeltaMinus], 0),
        term(1, &[Lambda2, DeltaPlus], 0),
        term(1, &[Lambda2, DeltaMinus], 0),
        term(2, &[Lambda3], 0),
        term(1, &[Lambda1, Lambda3], 0),
    ])
}

/// Graded restriction of α to Spin(10)·S¹:
/// `λ1·ξ⁻² + Δ⁻·ξ + ξ⁴` (the class called V).
pub fn rho_prime_alpha() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda1], -2),
        term(1, &[DeltaMinus], 1),
        term(1, &[], 4),
    ])
}

/// Graded restriction of β to Spin(10)·S¹:
/// `λ1·ξ² + Δ⁺·ξ⁻¹ + ξ⁻⁴` (the class called V′).
pub fn rho_prime_beta() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda1], 2),
        term(1, &[DeltaPlus], -1),
        term(1, &[], -4),
    ])
}

/// Graded restriction of the adjoint class γ:
/// `1 + λ2 + Δ⁺·ξ³ + Δ⁻·ξ⁻³`.
pub fn rho_prime_gamma() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[], 0),
        term(1, &[Lambda2], 0),
        term(1, &[DeltaPlus], 3),
        term(1, &[DeltaMinus], -3),
    ])
}

/// Graded restriction of Λ²α:
/// `λ2·ξ⁻⁴ + λ3·ξ² + λ1·Δ⁻·ξ⁻¹ + λ1·ξ² + Δ⁻·ξ⁵`.
pub fn rho_prime_ext2_alpha() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda2], -4),
        term(1, &[Lambda3], 2),
        term(1, &[Lambda1, DeltaMinus], -1),
        term(1, &[Lambda1], 2),
        term(1, &[DeltaMinus], 5),
    ])
}

/// Graded restriction of Λ²β:
/// `λ2·ξ⁴ + λ3·ξ⁻² + λ1·Δ⁺·ξ + λ1·ξ⁻² + Δ⁺·ξ⁻⁵`.
pub fn rho_prime_ext2_beta() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda2], 4),
        term(1, &[Lambda3], -2),
        term(1, &[Lambda1, DeltaPlus], 1),
        term(1, &[Lambda1], -2),
        term(1, &[DeltaPlus], -5),
    ])
}

/// Graded restriction of Λ²γ:
/// `λ2 + (1 + λ2)(Δ⁺·ξ³ + Δ⁻·ξ⁻³) + λ3·ξ⁶ + λ3·ξ⁻⁶ + Λ²(λ2) + Δ⁺·Δ⁻`.
pub fn rho_prime_ext2_gamma() -> SpinExpr {
    SpinExpr::new(vec![
        term(1, &[Lambda2], 0),
        term(1, &[DeltaPlus], 3),
        term(1, &[DeltaMinus], -3),
        term(1, &[Lambda2, DeltaPlus], 3),
        term(1, &[Lambda2, DeltaMinus], -3),
        term(1, &[Lambda3], 6),
        term(1, &[Lambda3], -6),
        term(1, &[Ext2Lambda2], 0),
        term(1, &[DeltaPlus, DeltaMinus], 0),
    ])
}

/// `c(r(ρ(α))) = 2(1 + λ1) + Δ⁺ + Δ⁻`: complexification of the
/// realification of the restricted 27-dimensional class.
pub fn c_r_rho_alpha() -> SpinExpr {
    SpinExpr::new(vec![
        term(2, &[], 0),
        term(2, &[Lambda1], 0),
        term(1, &[DeltaPlus], 0),
        term(1, &[DeltaMinus], 0),
    ])
}

impl SpinSymbol {
    pub fn label(self) -> &'static str {
        match self {
            Lambda1 => "lambda1",
            Lambda2 => "lambda2",
            Lambda3 => "lambda3",
            Lambda4 => "lambda4",
            DeltaPlus => "Delta+",
            DeltaMinus => "Delta-",
            Ext2Lambda2 => "Ext2(lambda2)",
        }
    }
}

/// Renders an expression for human-readable witnesses, e.g.
/// `1 + lambda1 + Delta- * xi`.
pub fn render(expr: &SpinExpr) -> String {
    let mut parts = Vec::new();
    for t in &expr.terms {
        let mut piece = String::new();
        if t.coeff != 1 || (t.factors.is_empty() && t.xi == 0) {
            piece.push_str(&t.coeff.to_string());
        }
        for f in &t.factors {
            if !piece.is_empty() {
                piece.push('*');
            }
            piece.push_str(f.label());
        }
        if t.xi != 0 {
            if !piece.is_empty() {
                piece.push('*');
            }
            piece.push_str(&format!("xi^{}", t.xi));
        }
        parts.push(piece);
    }
    parts.join(" + ")
}

/// Trivial check that expressions carry the dimensions they claim: the
/// virtual dimension of the evaluated character.
pub fn expr_dimension(expr: &SpinExpr, basis: &Spin10Basis) -> Int {
    expr.character_over_spin10(basis).dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_dimensions() {
        let basis = Spin10Basis::new();
        assert_eq!(expr_dimension(&rho_alpha(), &basis), Int::from(27));
        assert_eq!(expr_dimension(&rho_beta(), &basis), Int::from(27));
        assert_eq!(expr_dimension(&rho_gamma(), &basis), Int::from(78));
        assert_eq!(expr_dimension(&rho_ext2_alpha(), &basis), Int::from(351));
        assert_eq!(expr_dimension(&rho_ext2_beta(), &basis), Int::from(351));
        assert_eq!(expr_dimension(&rho_ext2_gamma(), &basis), Int::from(3003));
        assert_eq!(expr_dimension(&rho_prime_alpha(), &basis), Int::from(27));
        assert_eq!(expr_dimension(&rho_prime_ext2_gamma(), &basis), Int::from(3003));
        assert_eq!(expr_dimension(&c_r_rho_alpha(), &basis), Int::from(54));
    }

    #[test]
    fn graded_and_ungraded_forms_agree_after_forgetting_xi() {
        let basis = Spin10Basis::new();
        // The Λ²γ pair agrees only through the λ1·λ3 and Clifford
        // relations, so this doubles as a cross-check of those.
        for (graded, plain) in [
            (rho_prime_alpha(), rho_alpha()),
            (rho_prime_beta(), rho_beta()),
            (rho_prime_gamma(), rho_gamma()),
            (rho_prime_ext2_alpha(), rho_ext2_alpha()),
            (rho_prime_ext2_beta(), rho_ext2_beta()),
            (rho_prime_ext2_gamma(), rho_ext2_gamma()),
        ] {
            let forgot = graded.character_over_spin10(&basis);
            let expected = plain.character_over_spin10(&basis);
            assert_eq!(forgot, expected, "{}", render(&graded));
        }
    }

    #[test]
    fn xi_degree_helpers() {
        let one = xi_power(3);
        assert_eq!(one.dimension(), Int::from(1));
        let w: Vec<_> = one.terms().map(|(w, _)| w.clone()).collect();
        assert_eq!(w[0], WeightVector::integers(&[0, 0, 0, 0, 0, 3]));
        let lifted = with_xi_degree(&spin10_standard_for_test(), -2);
        assert_eq!(lifted.ambient_dim(), 6);
        assert_eq!(lifted.dimension(), Int::from(10));
    }

    fn spin10_standard_for_test() -> FormalCharacter {
        crate::charcalc::spin10_standard()
    }

    #[test]
    fn render_is_readable() {
        assert_eq!(render(&rho_alpha()), "1 + lambda1 + Delta-");
        assert_eq!(
            render(&rho_prime_alpha()),
            "lambda1*xi^-2 + Delta-*xi^1 + xi^4"
        );
    }
}
