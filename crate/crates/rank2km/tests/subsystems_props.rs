use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rank2km::roots::{coords, real_roots};
use rank2km::subsystems::{
    delta_any, delta_re_subsystem, divisibility_suite, eps_any, index_sets, phi_closure_oracle, phi_subsystem, Shape,
    SubsystemDescriptor,
};
use rank2km::{CartanData, Family, RealRoot, RootVector};

const TEST_POINTS: [(i64, i64); 7] = [(5, 1), (4, 1), (2, 2), (3, 2), (5, 5), (1, 5), (1, 4)];
const BOUND: i64 = 25;

fn cd(a: i64, b: i64) -> CartanData {
    CartanData::new(a, b).unwrap()
}

fn q(c: &CartanData, u: &RootVector) -> BigInt {
    &u.x * &u.x * c.a() - &u.x * &u.y * c.ab() + &u.y * &u.y * c.b()
}

/// `Q(u + v) - Q(u) - Q(v)`, which is `b·(u, v)` in the normalization `|α₂|² = 2`.
fn polar(c: &CartanData, u: &RootVector, v: &RootVector) -> BigInt {
    q(c, &(u + v)) - q(c, u) - q(c, v)
}

/// Row-reduced basis `{(p, t), (0, s)}` of the lattice spanned by `gens`.
struct Hnf {
    p: BigInt,
    t: BigInt,
    s: BigInt,
}

impl Hnf {
    fn new(gens: &[RootVector]) -> Hnf {
        let mut rows: Vec<(BigInt, BigInt)> = gens.iter().map(|g| (g.x.clone(), g.y.clone())).collect();
        // Euclid on the first coordinate until at most one row has x != 0.
        loop {
            rows.sort_by_key(|r| r.0.abs());
            let Some(pivot) = rows.iter().position(|r| !r.0.is_zero()) else { break };
            if rows[pivot + 1..].iter().all(|r| r.0.is_zero()) {
                break;
            }
            let (px, py) = rows[pivot].clone();
            for r in rows.iter_mut().skip(pivot + 1) {
                let k = r.0.div_floor(&px);
                r.0 -= &k * &px;
                r.1 -= &k * &py;
            }
        }
        let (p, t) = rows.iter().find(|r| !r.0.is_zero()).cloned().unwrap_or_default();
        let s = rows.iter().filter(|r| r.0.is_zero()).fold(BigInt::zero(), |g, r| g.gcd(&r.1));
        Hnf { p, t, s }
    }

    fn contains(&self, v: &RootVector) -> bool {
        let rest = if self.p.is_zero() {
            if !v.x.is_zero() {
                return false;
            }
            v.y.clone()
        } else {
            if !v.x.is_multiple_of(&self.p) {
                return false;
            }
            &v.y - (&v.x / &self.p) * &self.t
        };
        if self.s.is_zero() {
            rest.is_zero()
        } else {
            rest.is_multiple_of(&self.s)
        }
    }

    fn is_everything(&self) -> bool {
        self.p.abs().is_one() && self.s.abs().is_one()
    }
}

fn random_generators(rng: &mut ChaCha8Rng) -> Vec<RealRoot> {
    let n = rng.gen_range(1..=4);
    (0..n).map(|_| RealRoot::new(Family::ALL[rng.gen_range(0..4)], rng.gen_range(-6..=6))).collect()
}

/// Solves `v = c₁β₁ + c₂β₂` (or `v = c₁β₁` in rank 1); `None` unless integral.
fn coefficients(c: &CartanData, d: &SubsystemDescriptor, v: &RootVector) -> Option<Vec<BigInt>> {
    let b: Vec<_> = d.simple_roots.iter().map(|&r| coords(c, r)).collect();
    if b.len() == 1 {
        let k = if !b[0].x.is_zero() { &v.x / &b[0].x } else { &v.y / &b[0].y };
        return (&b[0].scale(&k) == v).then(|| vec![k]);
    }
    let det = &b[0].x * &b[1].y - &b[1].x * &b[0].y;
    let n1 = &v.x * &b[1].y - &b[1].x * &v.y;
    let n2 = &b[0].x * &v.y - &v.x * &b[0].y;
    (n1.is_multiple_of(&det) && n2.is_multiple_of(&det)).then(|| vec![n1 / &det, n2 / &det])
}

fn check_descriptor(c: &CartanData, d: &SubsystemDescriptor, members: &BTreeSet<RealRoot>, label: &str) {
    let (a, b) = (c.a(), c.b());
    let vecs: Vec<_> = d.simple_roots.iter().map(|&r| coords(c, r)).collect();
    assert_eq!(d.cartan.len(), vecs.len(), "{label}");
    for i in 0..vecs.len() {
        for j in 0..vecs.len() {
            // ⟨β_j, β_i^∨⟩ = 2(β_j, β_i)/(β_i, β_i) = polar(β_j, β_i)/Q(β_i).
            assert_eq!(&d.cartan[i][j] * q(c, &vecs[i]), polar(c, &vecs[j], &vecs[i]), "{label}: cartan[{i}][{j}]");
            assert_eq!(&d.inner_product[i][j] * BigInt::from(b), polar(c, &vecs[i], &vecs[j]).into(), "{label}");
        }
    }
    for &s in &d.simple_roots {
        assert!(members.contains(&s) || s.j.abs() > BOUND, "{label}: simple root {s} outside");
    }
    // Root basis: every member is an integral combination with coefficients of one sign.
    for &r in members {
        let cs = coefficients(c, d, &coords(c, r)).unwrap_or_else(|| panic!("{label}: {r} not integral"));
        let signs: BTreeSet<_> = cs.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
        assert!(signs.len() <= 1, "{label}: {r} = {cs:?}");
    }
    if let Some((x, y)) = d.cartan_type() {
        let prod = &x * &y;
        if a * b == 4 {
            assert_eq!(prod, BigInt::from(4), "{label}");
        } else {
            assert!(prod > BigInt::from(4), "{label}: H({x},{y})");
        }
        let (big, small) = (a.max(b), a.min(b));
        let dd = d.shape.params().1.unwrap();
        let expect: BTreeSet<BigInt> = match d.shape {
            Shape::IIL { .. } | Shape::IIS { .. } => [delta_any(c, dd)].into(),
            Shape::IILS { .. } => [eps_any(c, dd) * big, eps_any(c, dd) * small].into(),
            _ => unreachable!(),
        };
        assert_eq!(BTreeSet::from([x.clone(), y.clone()]), expect, "{label}: {}", d.shape);
    } else {
        assert_eq!(d.simple_roots.len(), 1, "{label}");
    }
}

#[test]
fn random_generator_sets_match_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let window: Vec<_> = real_roots(BOUND).collect();
    let mut exceptional_full = 0;
    let mut exceptional_h41 = 0;
    for (a, b) in TEST_POINTS {
        let c = cd(a, b);
        let mut sets: Vec<Vec<RealRoot>> = (0..220).map(|_| random_generators(&mut rng)).collect();
        // Make sure the exceptional Δ-cases are exercised.
        let (su, sl) = if a >= b { (Family::SU, Family::SL) } else { (Family::LL, Family::LU) };
        sets.push(vec![RealRoot::new(su, 0), RealRoot::new(sl, 0)]);
        sets.push(vec![RealRoot::new(su, 0), RealRoot::new(su, 3)]);
        sets.push(vec![RealRoot::new(su, -1), RealRoot::new(su, 4)]);
        for gens in &sets {
            let label = format!("H({a},{b}) {gens:?}");
            let p = phi_subsystem(&c, gens).unwrap();
            let closure = phi_closure_oracle(gens, BOUND);
            for &r in &window {
                assert_eq!(p.contains(r), closure.contains(&r), "{label}: {r} under {}", p.shape);
            }
            check_descriptor(&c, &p, &closure, &label);

            let hnf = Hnf::new(&gens.iter().map(|&g| coords(&c, g)).collect::<Vec<_>>());
            let d = delta_re_subsystem(&c, gens).unwrap();
            let lattice: BTreeSet<_> = window.iter().copied().filter(|&r| hnf.contains(&coords(&c, r))).collect();
            for &r in &window {
                assert_eq!(d.contains(r), lattice.contains(&r), "{label}: Δ membership of {r} under {}", d.shape);
            }
            check_descriptor(&c, &d, &lattice, &format!("{label} Δ"));
            // Φ(Γ) ⊆ Δ^re(Γ), with equality unless an exceptional case applies.
            assert!(closure.is_subset(&lattice), "{label}");
            if d.shape != p.shape {
                assert_eq!(a.min(b), 1, "{label}: {} vs {}", p.shape, d.shape);
                if a * b == 4 {
                    exceptional_h41 += 1;
                } else {
                    exceptional_full += 1;
                }
            }

            if hnf.is_everything() {
                let all = closure.len() == window.len();
                let one_orbit = !all
                    && closure.iter().all(|r| r.family.in_alpha1_orbit() == (a < b))
                    && closure.len() == window.len() / 2;
                assert!(all || (one_orbit && a.min(b) == 1), "{label}: spans the lattice but Φ = {}", p.shape);
            }
        }
    }
    assert!(exceptional_full > 0, "all-short → full case never exercised");
    assert!(exceptional_h41 > 0, "H(4,1) odd-d case never exercised");
}

#[test]
fn index_sets_do_not_depend_on_cartan_data() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let gens = random_generators(&mut rng);
        let sets = index_sets(&gens).unwrap();
        for r in real_roots(8) {
            let expect = phi_closure_oracle(&gens, BOUND).contains(&r);
            assert_eq!(sets.contains(r), expect, "{gens:?} {r}");
        }
    }
    assert!(index_sets(&[]).is_err());
    assert!(phi_subsystem(&cd(5, 1), &[]).is_err());
}

#[test]
fn subsystem_parameters_grow() {
    for (a, b) in [(5, 1), (3, 2), (5, 5), (1, 7), (6, 1)] {
        let c = cd(a, b);
        let ab = BigInt::from(a * b);
        for d in 1..=20 {
            assert!(delta_any(&c, d) >= &ab - 2, "δ_{d} in H({a},{b})");
            assert!(delta_any(&c, d + 1) > delta_any(&c, d));
            assert!(eps_any(&c, d + 1) > eps_any(&c, d));
        }
    }
    for (a, b) in [(2, 2), (4, 1), (1, 4)] {
        let c = cd(a, b);
        for d in 1..=20 {
            assert_eq!(delta_any(&c, d), BigInt::from(2), "δ_{d} in H({a},{b})");
        }
    }
}

#[test]
fn divisibility_identities() {
    for (a, b) in [(5, 1), (4, 1), (2, 2), (3, 2), (7, 3), (5, 5)] {
        let report = divisibility_suite(&cd(a, b), 8, 24);
        assert!(report.passed(), "H({a},{b}):\n{report}");
        assert!(report.total_checks() > 1000);
    }
}

#[test]
fn hnf_oracle_sanity() {
    let v = |x: i64, y: i64| RootVector::new(BigInt::from(x), BigInt::from(y));
    let h = Hnf::new(&[v(2, 0), v(0, 3)]);
    assert!(h.contains(&v(4, -6)) && !h.contains(&v(1, 0)) && !h.contains(&v(2, 1)));
    let h = Hnf::new(&[v(0, 1), v(1, 1)]);
    assert!(h.is_everything());
    let h = Hnf::new(&[v(2, 4), v(3, 6)]);
    assert!(h.contains(&v(1, 2)) && !h.contains(&v(1, 3)) && !h.is_everything());
}
