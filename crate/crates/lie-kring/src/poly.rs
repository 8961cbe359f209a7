//! Dense univariate polynomials over `Z`, used for the quotient ring
//! `B = Z[t]` and the Koszul homology computations.
//!
//! Coefficients are arbitrary-precision integers; the representation is
//! canonical (no trailing zero coefficients), so equality is structural.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Int;

/// A polynomial `c0 + c1·t + c2·t² + …` with `coeffs[i] = cᵢ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// The variable `t`.
    pub fn var() -> Self {
        IntPoly::from_coeffs(vec![Int::zero(), Int::one()])
    }

    pub fn monomial(coeff: Int, degree: usize) -> Self {
        let mut coeffs = vec![Int::zero(); degree + 1];
        coeffs[degree] = coeff;
        IntPoly::from_coeffs(coeffs)
    }

    /// Trims trailing zeros so the representation stays canonical.
    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn evaluate(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `t = u + c`, returning the polynomial in `u`.  Uses
    /// repeated synthetic division by `(t − c)`; the remainders are the
    /// shifted coefficients in ascending order.
    pub fn shift_variable(&self, c: i64) -> IntPoly {
        let c = Int::from(c);
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(work.len());
        while !work.is_empty() {
            // one synthetic division by (t − c): slots become the Horner
            // values b_k = a_k + c·b_{k+1}; b_0 is the remainder and the
            // rest the quotient
            let mut carry = Int::zero();
            for w in work.iter_mut().rev() {
                carry = carry * &c + &*w;
                w.clone_from(&carry);
            }
            out.push(work.remove(0));
        }
        IntPoly::from_coeffs(out)
    }

    /// Greatest common divisor of the coefficients (non-negative; 0 only
    /// for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        let mut coeffs: Vec<Int> = self.coeffs.iter().map(|c| c / &g).collect();
        // normalize the sign so the leading coefficient is positive
        if coeffs.last().is_some_and(Signed::is_negative) {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Exact division in `Z[t]`: `Some(q)` with `self = q·d` when such a
    /// quotient exists, else `None`.  When the quotient exists every
    /// leading-coefficient division along the long division is exact.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (dd, dn) = (d.degree()?, self.degree()?);
        if dn < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); dn - dd + 1];
        let lead = d.leading_coeff();
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder: the `r` with `lc(d)^(Δ+1)·self = q·d + r`,
    /// `deg r < deg d` (Δ = deg self − deg d).
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "pseudo-remainder by zero");
        let dd = d.degree().unwrap();
        let Some(dn) = self.degree() else {
            return IntPoly::zero();
        };
        if dn < dd {
            return self.clone();
        }
        let lead = d.leading_coeff();
        let mut rem = self.clone();
        for _ in 0..=(dn - dd) {
            let Some(rn) = rem.degree() else { break };
            if rn < dd {
                // keep scaling so the stated identity holds exactly
                rem = rem.scaled(&lead);
                continue;
            }
            let top = rem.leading_coeff();
            let mut next = rem.scaled(&lead);
            let shift = IntPoly::monomial(top, rn - dd);
            next = &next - &(&shift * d);
            rem = next;
        }
        rem
    }

    pub fn scaled(&self, k: &Int) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Renders with the given variable name, e.g. `t^2 - 28*t + 300`
    /// (descending degree).
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if i > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }
}

/// Primitive polynomial gcd in `Z[t]` via Gauss's lemma and a primitive
/// pseudo-remainder sequence; the result has positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part().scaled(&b.content());
    }
    if b.is_zero() {
        return a.primitive_part().scaled(&a.content());
    }
    let content_gcd = a.content().gcd(&b.content());
    let (mut p, mut q) = (a.primitive_part(), b.primitive_part());
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = p.pseudo_rem(&q).primitive_part();
        p = q;
        q = r;
    }
    p.scaled(&content_gcd)
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

// owned-value operators so `IntPoly` satisfies the generic ring bounds of
// the symbolic-expression evaluator
impl std::ops::Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl std::ops::Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::ops::Mul<i64> for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: i64) -> IntPoly {
        self.scaled(&Int::from(rhs))
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPoly({})", self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn canonical_representation() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn ring_operations() {
        let a = p(&[1, 1]); // 1 + t
        let b = p(&[-1, 1]); // -1 + t
        assert_eq!(&a * &b, p(&[-1, 0, 1])); // t² - 1
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(-&a, p(&[-1, -1]));
        // owned forms used by the generic evaluator
        assert_eq!(a.clone() * b.clone(), p(&[-1, 0, 1]));
        assert_eq!(a.clone() * 3i64, p(&[3, 3]));
    }

    #[test]
    fn evaluation_and_shift() {
        let q = p(&[300, -28, 1]); // t² - 28t + 300
        assert_eq!(q.evaluate(&Int::from(10)), Int::from(120));
        // t = u + 10: (u+10)² - 28(u+10) + 300 = u² - 8u + 120
        assert_eq!(q.shift_variable(10), p(&[120, -8, 1]));
        // shifting back is the inverse
        assert_eq!(q.shift_variable(10).shift_variable(-10), q);
        // (t-10)³ shifted by 10 is u³
        let c = p(&[-1000, 300, -30, 1]);
        assert_eq!(c.shift_variable(10), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None); // 2t+1 does not divide
        assert_eq!(p(&[2, 2]).div_exact(&p(&[2])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2])), None);
        assert_eq!(IntPoly::zero().div_exact(&a), Some(IntPoly::zero()));
    }

    #[test]
    fn content_and_primitive_part() {
        let a = p(&[6, -9, 12]);
        assert_eq!(a.content(), Int::from(3));
        assert_eq!(a.primitive_part(), p(&[2, -3, 4]));
        // sign normalization
        assert_eq!(p(&[3, -6]).primitive_part(), p(&[-1, 2]));
        assert_eq!(IntPoly::zero().content(), Int::from(0));
    }

    #[test]
    fn gcd_examples() {
        // gcd(t²-1, t²-2t+1) = t-1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1])), p(&[-1, 1]));
        // coprime
        assert_eq!(poly_gcd(&p(&[1, 1]), &p(&[2, 1])), p(&[1]));
        // integer contents participate
        assert_eq!(poly_gcd(&p(&[4]), &p(&[6])), p(&[2]));
        assert_eq!(poly_gcd(&p(&[2, 2]), &p(&[4, 4])), p(&[2, 2]));
        // with zero
        assert_eq!(poly_gcd(&IntPoly::zero(), &p(&[0, 5])), p(&[0, 5]));
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[1, 2, 3, 4]);
        let d = p(&[5, 0, 2]);
        let r = a.pseudo_rem(&d);
        assert!(r.degree() < d.degree());
        // lc(d)^(Δ+1)·a ≡ r (mod d): verify by exact division of the difference
        let delta = a.degree().unwrap() - d.degree().unwrap();
        let scale = Int::from(2).pow(delta as u32 + 1);
        let lhs = a.scaled(&scale);
        let diff = &lhs - &r;
        assert!(diff.div_exact(&d).is_some());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[300, -28, 1]).render("t"), "t^2 - 28*t + 300");
        assert_eq!(p(&[0, 0, 0, 1]).render("u"), "u^3");
        assert_eq!(p(&[-1000, 300, -30, 1]).render("t"), "t^3 - 30*t^2 + 300*t - 1000");
        assert_eq!(p(&[16]).render("t"), "16");
        assert_eq!(p(&[0, -2]).render("t"), "-2*t");
        assert_eq!(IntPoly::zero().render("t"), "0");
        assert_eq!(format!("{}", p(&[25, 2])), "2*t + 25");
    }
}
