use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use rank2km::growth::PreciseGrowth;
use rank2km::roots::{
    classify, coords, eta, gamma, is_long, negate, pairing, q_form, real_roots, reflect_in, reflect_vector, weyl_act,
};
use rank2km::{CartanData, Family, RealRoot, Reflection, RootClass, RootVector, WeylWord};

const TEST_POINTS: [(i64, i64); 6] = [(5, 1), (4, 1), (2, 2), (3, 2), (7, 3), (5, 5)];

fn cd(a: i64, b: i64) -> CartanData {
    CartanData::new(a, b).unwrap()
}

fn v(x: i64, y: i64) -> RootVector {
    RootVector::new(BigInt::from(x), BigInt::from(y))
}

/// γ_j computed from scratch in both directions from γ₀ = 0, γ₁ = 1.
fn gamma_oracle(a: i64, b: i64, j: i64) -> BigInt {
    let t = BigInt::from(a * b - 2);
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if j >= 0 {
        for _ in 0..j {
            let next = &t * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        prev
    } else {
        // Run backwards: γ_{k-1} = tγ_k - γ_{k+1}.
        let (mut hi, mut lo) = (BigInt::one(), BigInt::zero());
        for _ in 0..(-j) {
            let below = &t * &lo - &hi;
            hi = std::mem::replace(&mut lo, below);
        }
        lo
    }
}

fn eta_oracle(a: i64, b: i64, j: i64) -> BigInt {
    gamma_oracle(a, b, j) + gamma_oracle(a, b, j + 1)
}

/// Coordinates from the closed forms in γ and η.
fn coords_oracle(a: i64, b: i64, r: RealRoot) -> RootVector {
    let (g, e) = (|k| gamma_oracle(a, b, k), |k| eta_oracle(a, b, k));
    let j = r.j;
    match r.family {
        Family::LL => RootVector::new(e(j), g(j) * a),
        Family::LU => RootVector::new(e(j), g(j + 1) * a),
        Family::SU => RootVector::new(g(j) * b, e(j)),
        Family::SL => RootVector::new(g(j + 1) * b, e(j)),
    }
}

fn q(a: i64, b: i64, u: &RootVector) -> BigInt {
    &u.x * &u.x * a - &u.x * &u.y * (a * b) + &u.y * &u.y * b
}

/// `β - ⟨β, α^∨⟩α` with the pairing read off the polarization of Q.
fn reflection_oracle(a: i64, b: i64, alpha: &RootVector, beta: &RootVector) -> RootVector {
    let num = q(a, b, &(alpha + beta)) - q(a, b, alpha) - q(a, b, beta);
    let (c, rem) = num.div_rem(&q(a, b, alpha));
    assert!(rem.is_zero());
    beta - &alpha.scale(&c)
}

#[test]
fn sequences_match_independent_recurrence() {
    for (a, b) in TEST_POINTS {
        let c = cd(a, b);
        let t = BigInt::from(a * b - 2);
        for j in -50..=50 {
            assert_eq!(gamma(&c, j), gamma_oracle(a, b, j), "γ_{j} in H({a},{b})");
            assert_eq!(eta(&c, j), eta_oracle(a, b, j), "η_{j} in H({a},{b})");
            assert_eq!(eta(&c, j), &t * eta(&c, j - 1) - eta(&c, j - 2));
            assert_eq!(gamma(&c, -j), -gamma(&c, j));
        }
        let ab = BigInt::from(a * b);
        for j in 0..=50 {
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            assert!((eta(&c, j) - sign).is_multiple_of(&ab), "η_{j} mod ab in H({a},{b})");
        }
    }
}

#[test]
fn coordinates_match_closed_forms_and_weyl_words() {
    use Reflection::*;
    for (a, b) in TEST_POINTS {
        let c = cd(a, b);
        for r in real_roots(50) {
            assert_eq!(coords(&c, r), coords_oracle(a, b, r), "{r} in H({a},{b})");
        }
        let (a1, a2) = (v(1, 0), v(0, 1));
        for j in 0..=20usize {
            let rot = WeylWord::rotation(j);
            let back = WeylWord::new([W2, W1].repeat(j));
            let at = |f, k: usize| coords(&c, RealRoot::new(f, k as i64));
            assert_eq!(weyl_act(&c, &rot, &a1), at(Family::LL, j));
            assert_eq!(weyl_act(&c, &back, &weyl_act(&c, &WeylWord::new(vec![W2]), &a1)), at(Family::LU, j));
            assert_eq!(weyl_act(&c, &back, &a2), at(Family::SU, j));
            assert_eq!(weyl_act(&c, &rot, &weyl_act(&c, &WeylWord::new(vec![W1]), &a2)), at(Family::SL, j));
        }
    }
}

#[test]
fn negation_norms_and_round_trip() {
    for (a, b) in TEST_POINTS {
        let c = cd(a, b);
        for r in real_roots(50) {
            let u = coords(&c, r);
            assert_eq!(coords(&c, negate(r)), -u.clone(), "{r}");
            assert_eq!(negate(negate(r)), r);
            let expect = if r.family.in_alpha1_orbit() { a } else { b };
            assert_eq!(q_form(&c, &u), BigInt::from(expect), "{r} in H({a},{b})");
            assert_eq!(is_long(&c, r), a == b || (a > b) == r.family.in_alpha1_orbit());
            assert_eq!(classify(&c, &u), RootClass::Real(r), "{r} in H({a},{b})");
        }
    }
}

#[test]
fn reflect_in_agrees_with_vector_reflection() {
    for (a, b) in TEST_POINTS {
        let c = cd(a, b);
        for m in real_roots(10) {
            let mv = coords(&c, m);
            for r in real_roots(10) {
                let image = reflection_oracle(a, b, &mv, &coords(&c, r));
                assert_eq!(reflect_vector(&c, m, &coords(&c, r)), image);
                assert_eq!(classify(&c, &image), RootClass::Real(reflect_in(m, r)), "w_{m}({r}) in H({a},{b})");
            }
        }
    }
}

#[test]
fn growth_envelopes() {
    for (a, b) in TEST_POINTS.into_iter().filter(|&(a, b)| a * b > 4) {
        let c = cd(a, b);
        for j in 0..=40u64 {
            let g = PreciseGrowth::new(&c, PreciseGrowth::digits_for(&c, j).max(30)).unwrap();
            let chk = g.check(&c, j);
            assert!(chk.eta_within && chk.gamma_within, "j={j} in H({a},{b})");
        }
    }
}

#[test]
fn staircases() {
    for (a, b) in [(2, 2), (3, 2), (7, 3), (5, 5), (9, 4)] {
        let c = cd(a, b);
        let mut gaps = (BigInt::zero(), BigInt::zero());
        for j in 0..=40 {
            let (lo, mid, hi) = (gamma(&c, j) * b, eta(&c, j), gamma(&c, j + 1) * b);
            assert!(lo < mid && mid < hi, "j={j} in H({a},{b})");
            let now = (&mid - &lo, &hi - &mid);
            assert!(now.0 >= gaps.0 && now.1 >= gaps.1, "gaps shrink at j={j} in H({a},{b})");
            gaps = now;
        }
    }
    for a in [5, 6, 9, 17] {
        let c = cd(a, 1);
        for j in 1..=40 {
            assert!(gamma(&c, j + 1) < eta(&c, j) && eta(&c, j) < gamma(&c, j + 2), "j={j} in H({a},1)");
        }
    }
}

fn arb_cartan() -> impl Strategy<Value = (i64, i64)> {
    (1i64..=12, 1i64..=12).prop_filter("infinite type", |(a, b)| a * b >= 4)
}

fn arb_root(max: i64) -> impl Strategy<Value = RealRoot> {
    (prop::sample::select(Family::ALL.to_vec()), -max..=max).prop_map(|(f, j)| RealRoot::new(f, j))
}

fn arb_word(max_len: usize) -> impl Strategy<Value = WeylWord> {
    prop::collection::vec(prop::sample::select(vec![Reflection::W1, Reflection::W2]), 0..=max_len).prop_map(WeylWord::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn weyl_action_preserves_q((a, b) in arb_cartan(), w in arb_word(12), x in -1_000_000i64..=1_000_000, y in -1_000_000i64..=1_000_000) {
        let c = cd(a, b);
        let u = v(x, y);
        let image = weyl_act(&c, &w, &u);
        prop_assert_eq!(q_form(&c, &image), q_form(&c, &u));
        prop_assert_eq!(q(a, b, &image), q(a, b, &u));
        // Each letter is an involution.
        let mut rev = w.letters.clone();
        rev.reverse();
        prop_assert_eq!(weyl_act(&c, &WeylWord::new(rev), &image), u);
    }

    #[test]
    fn weyl_action_permutes_classes((a, b) in arb_cartan(), w in arb_word(8), x in -300i64..=300, y in -300i64..=300) {
        let c = cd(a, b);
        let u = v(x, y);
        let image = weyl_act(&c, &w, &u);
        let (before, after) = (classify(&c, &u), classify(&c, &image));
        match before {
            RootClass::Real(_) => prop_assert!(matches!(after, RootClass::Real(_))),
            other => prop_assert_eq!(after, other),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflection_is_beta_minus_pairing_alpha((a, b) in arb_cartan(), alpha in arb_root(30), beta in arb_root(30)) {
        let c = cd(a, b);
        let (av, bv) = (coords(&c, alpha), coords(&c, beta));
        let n = pairing(&c, &bv, alpha);
        let expect = &bv - &av.scale(&n);
        prop_assert_eq!(&reflect_vector(&c, alpha, &bv), &expect);
        prop_assert_eq!(&reflection_oracle(a, b, &av, &bv), &expect);
        prop_assert_eq!(classify(&c, &expect), RootClass::Real(reflect_in(alpha, beta)));
        // ⟨α, α^∨⟩ = 2 and ⟨β, α^∨⟩⟨α, β^∨⟩ >= 0.
        prop_assert_eq!(pairing(&c, &av, alpha), BigInt::from(2));
        prop_assert!(!(n * pairing(&c, &av, beta)).is_negative());
    }

    #[test]
    fn classify_agrees_with_q_on_small_vectors((a, b) in arb_cartan(), x in -200i64..=200, y in -200i64..=200) {
        let c = cd(a, b);
        let u = v(x, y);
        let small = RootVector::new(x, y);
        let class = classify(&c, &u);
        prop_assert_eq!(classify(&c, &small), class.clone());
        let qq = q(a, b, &u);
        match class {
            RootClass::Zero => prop_assert!(x == 0 && y == 0),
            RootClass::Imaginary => prop_assert!(!qq.is_positive()),
            RootClass::Real(r) => {
                prop_assert_eq!(coords(&c, r), u);
                prop_assert!(qq == BigInt::from(a) || qq == BigInt::from(b));
            }
            RootClass::NotARoot => prop_assert!(qq.is_positive()),
        }
    }
}
