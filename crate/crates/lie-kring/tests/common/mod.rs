//! Shared helpers for the integration suites: an independent
//! exterior-power oracle, a seeded character generator, and the
//! randomized property runners.

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lie_kring::charcalc::{self, decompose, irreducible_character, is_weyl_invariant};
use lie_kring::{FormalCharacter, Int, RootSystem, RootSystemKind, WeightVector};

/// Exterior power computed directly from the weight multiset: expand
/// `prod_w (1 + t e^w)` one weight copy at a time and read off the `t^k`
/// coefficient.  This route never touches the Newton-identity recursion
/// inside the library, so agreement is meaningful evidence.
pub fn exterior_power_oracle(chi: &FormalCharacter, k: u32) -> FormalCharacter {
    let k = k as usize;
    let dim = chi.ambient_dim();
    let mut layers: Vec<FormalCharacter> = Vec::with_capacity(k + 1);
    layers.push(FormalCharacter::trivial(dim));
    for _ in 0..k {
        layers.push(FormalCharacter::zero(dim));
    }
    for (weight, mult) in chi.terms() {
        let copies = mult
            .to_usize()
            .expect("oracle only handles small effective characters");
        for _ in 0..copies {
            for j in (1..=k).rev() {
                let lifted = layers[j - 1].translated(weight);
                layers[j] = layers[j]
                    .add(&lifted)
                    .expect("dimensions agree by construction");
            }
        }
    }
    layers.pop().expect("layer k exists")
}

/// Random effective character on an `ambient_dim`-torus with dimension at
/// most `max_dim`: a handful of small weights with small multiplicities.
pub fn random_character(
    rng: &mut ChaCha8Rng,
    ambient_dim: usize,
    max_dim: i64,
) -> FormalCharacter {
    let mut chi = FormalCharacter::zero(ambient_dim);
    let mut dim = 0i64;
    for _ in 0..rng.gen_range(1..=6) {
        let mult = rng.gen_range(1..=3);
        if dim + mult > max_dim {
            break;
        }
        dim += mult;
        let coords: Vec<i64> = (0..ambient_dim).map(|_| rng.gen_range(-2..=2)).collect();
        chi.add_term(WeightVector::integers(&coords), Int::from(mult));
    }
    if chi.is_zero() {
        chi.add_term(WeightVector::zero(ambient_dim), Int::from(1));
    }
    chi
}

/// Exterior powers against the product-expansion oracle, 100 seeded cases
/// of dimension at most 30, exponents 1 through 3.
pub fn property_exterior_oracle(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..100 {
        let chi = random_character(&mut rng, 5, 30);
        for k in 1..=3 {
            let fast = chi
                .exterior_power(k)
                .expect("effective characters admit exterior powers");
            let slow = exterior_power_oracle(&chi, k);
            assert_eq!(fast, slow, "case {case}, exponent {k}");
        }
    }
}

/// Weyl invariance of every irreducible character the library constructs.
pub fn property_weyl_invariance() {
    let d5 = RootSystem::build(RootSystemKind::D5);
    for k in 1..=3 {
        assert!(is_weyl_invariant(&d5, &charcalc::spin10_lambda(k)));
    }
    assert!(is_weyl_invariant(&d5, &charcalc::spin10_half_spin(true)));
    assert!(is_weyl_invariant(&d5, &charcalc::spin10_half_spin(false)));

    let e6 = RootSystem::build(RootSystemKind::E6);
    let mut hws: Vec<WeightVector> = (1..=6).map(|i| e6.fundamental_weight(i).clone()).collect();
    hws.push(e6.fundamental_weight(1) + e6.fundamental_weight(6));
    for coords in hws {
        let hw = e6.dominant(coords).expect("dominant by construction");
        let chi = irreducible_character(&e6, &hw).expect("supported kind");
        assert!(is_weyl_invariant(&e6, &chi), "highest weight {:?}", hw);
    }

    let e8 = RootSystem::build(RootSystemKind::E8);
    assert!(is_weyl_invariant(&e8, &charcalc::adjoint_character_e8()));
}

/// `dim(chi * psi) = dim(chi) * dim(psi)` on 100 seeded random pairs.
pub fn property_dimension_multiplicative(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    for case in 0..100 {
        let a = random_character(&mut rng, 5, 30);
        let b = random_character(&mut rng, 5, 30);
        let product = a.multiply(&b).expect("same torus");
        assert_eq!(
            product.dimension(),
            a.dimension() * b.dimension(),
            "case {case}"
        );
    }
}

/// Assemble a random non-negative combination of irreducibles, decompose
/// it, and compare multiplicities; 50 seeded cases.
pub fn property_decompose_round_trip(seed: u64) {
    let rs = RootSystem::build(RootSystemKind::D5);
    let pool: Vec<WeightVector> = vec![
        WeightVector::zero(5),
        rs.fundamental_weight(1).clone(),
        rs.fundamental_weight(2).clone(),
        rs.fundamental_weight(4).clone(),
        rs.fundamental_weight(5).clone(),
        rs.fundamental_weight(1) + rs.fundamental_weight(1),
        rs.fundamental_weight(1) + rs.fundamental_weight(4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51ed2701);
    for case in 0..50 {
        let mut chosen: Vec<(WeightVector, i64)> = Vec::new();
        let mut chi = FormalCharacter::zero(5);
        for coords in &pool {
            let mult = rng.gen_range(0..=2);
            if mult == 0 {
                continue;
            }
            let hw = rs.dominant(coords.clone()).expect("dominant by construction");
            let irr = irreducible_character(&rs, &hw).expect("supported kind");
            chi = chi
                .add(&irr.scaled(&Int::from(mult)))
                .expect("same torus");
            chosen.push((coords.clone(), mult));
        }
        if chosen.is_empty() {
            continue;
        }
        let dec = decompose(&rs, &chi).expect("characters decompose");
        assert!(dec.matches(&rs, &chosen), "case {case}");
        let reassembled = charcalc::assemble(&rs, &dec).expect("assembly");
        assert_eq!(reassembled, chi, "case {case}");
    }
}

/// Adams operations are ring homomorphisms:
/// `psi^k(a*b) = psi^k(a) * psi^k(b)`; 50 seeded cases.
pub fn property_adams_multiplicative(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xada5);
    for case in 0..50 {
        let a = random_character(&mut rng, 5, 20);
        let b = random_character(&mut rng, 5, 20);
        let k = rng.gen_range(2..=4);
        let lhs = a.multiply(&b).expect("same torus").adams(k);
        let rhs = a.adams(k).multiply(&b.adams(k)).expect("same torus");
        assert_eq!(lhs, rhs, "case {case}, k = {k}");
    }
}
