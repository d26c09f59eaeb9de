//! Self-check suites over a window of root indices, shared by the tests and the CLI.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::growth::PreciseGrowth;
use crate::oracle::{A22Oracle, OracleResult};
use crate::report::{CheckResult, Report};
use crate::roots::{
    classify, coords, coroot_coords, eta, gamma, is_long, negate, pairing, q_form, real_roots, reflect_in,
    reflect_vector, Family, RealRoot, RootClass,
};
use crate::structure::{consistency_relations, decomposables, n_value, special_pairs, CommutatorResult, SignAssignment};
use crate::subsystems::{
    delta_re_membership_oracle, delta_re_subsystem, divisibility_suite, phi_closure_oracle, phi_subsystem,
};
use crate::sums::{predicted_real_sums, root_string, scan_real_sums, sum_class, sum_length_rule, SumLength};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Sums,
    Subsystems,
    Signs,
    Oracle,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["core", "sums", "subsystems", "signs", "oracle", "all"];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Sums => "sums",
            Suite::Subsystems => "subsystems",
            Suite::Signs => "signs",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "core" => Suite::Core,
            "sums" => Suite::Sums,
            "subsystems" => Suite::Subsystems,
            "signs" => Suite::Signs,
            "oracle" => Suite::Oracle,
            "all" => Suite::All,
            _ => return Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        })
    }
}

fn is_a22(cd: &CartanData) -> bool {
    (cd.a(), cd.b()) == (4, 1)
}

/// Runs one suite. `signs` defaults to all `+1`. `All` skips the oracle suite
/// unless `cd` is `H(4,1)`.
pub fn run_suite(cd: &CartanData, suite: Suite, window: i64, signs: Option<&SignAssignment>) -> Result<Report> {
    if window < 0 {
        return Err(Error::InvalidArgument("window must be nonnegative".into()));
    }
    let default = SignAssignment::all_plus(cd);
    let signs = signs.unwrap_or(&default);
    signs.validate(cd)?;
    Ok(match suite {
        Suite::Core => core_suite(cd, window),
        Suite::Sums => sums_suite(cd, window)?,
        Suite::Subsystems => subsystems_suite(cd, window)?,
        Suite::Signs => signs_suite(cd, signs, window)?,
        Suite::Oracle => {
            if !is_a22(cd) {
                return Err(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "the loop-algebra oracle models H(4,1) only" });
            }
            oracle_suite(cd, signs, window)?
        }
        Suite::All => {
            let mut r = core_suite(cd, window);
            r.extend(sums_suite(cd, window)?);
            r.extend(subsystems_suite(cd, window)?);
            r.extend(signs_suite(cd, signs, window)?);
            if is_a22(cd) {
                r.extend(oracle_suite(cd, signs, window)?);
            }
            r
        }
    })
}

/// Sequences, coordinates, classification, reflections and growth.
pub fn core_suite(cd: &CartanData, window: i64) -> Report {
    let t = cd.trace();
    let ab = BigInt::from(cd.ab());
    let mut rec = CheckResult::new("core: γ, η recurrences");
    for j in -window..=window {
        let g = gamma(cd, j + 2) - gamma(cd, j + 1) * t + gamma(cd, j);
        let e = eta(cd, j + 2) - eta(cd, j + 1) * t + eta(cd, j);
        rec.record(g.is_zero() && e.is_zero(), || format!("j = {j}"));
    }
    let mut modab = CheckResult::new("core: η_j ≡ (-1)^j mod ab");
    for j in 0..=window {
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        modab.record((eta(cd, j) - sign).is_multiple_of(&ab), || format!("j = {j}"));
    }
    let mut negation = CheckResult::new("core: coords(-α) = -coords(α)");
    let mut qmem = CheckResult::new("core: Q = a on long orbit, b on short orbit");
    let mut round = CheckResult::new("core: classify(coords(α)) = α");
    for r in real_roots(window) {
        let v = coords(cd, r);
        negation.record(coords(cd, negate(r)) == -v.clone(), || r.to_string());
        let want = if r.family.in_alpha1_orbit() { cd.a() } else { cd.b() };
        qmem.record(q_form(cd, &v) == BigInt::from(want), || r.to_string());
        round.record(classify(cd, &v) == RootClass::Real(r), || r.to_string());
    }
    let small = window.min(10);
    let mut refl = CheckResult::new("core: reflect_in agrees with vector reflection");
    let mut pair = CheckResult::new("core: coroot pairing is consistent");
    for m in real_roots(small) {
        let (c1, c2) = coroot_coords(cd, m);
        let mv = coords(cd, m);
        for r in real_roots(small) {
            let rv = coords(cd, r);
            let img = reflect_vector(cd, m, &rv);
            refl.record(coords(cd, reflect_in(m, r)) == img, || format!("{r} in {m}"));
            // ⟨β, α^∨⟩ = c₁⟨β, α₁^∨⟩ + c₂⟨β, α₂^∨⟩ with ⟨β, αᵢ^∨⟩ from the Cartan matrix.
            let p1 = &rv.x * 2 - &rv.y * cd.b();
            let p2 = &rv.y * 2 - &rv.x * cd.a();
            let via = &c1 * p1 + &c2 * p2;
            let direct = pairing(cd, &rv, m);
            pair.record(via == direct && img == &rv - &mv.scale(&direct), || format!("{r} against {m}"));
        }
    }
    let mut r = Report::new();
    for c in [rec, modab, negation, qmem, round, refl, pair] {
        r.push(c);
    }
    r.push(staircase(cd, window.min(40)));
    if !cd.is_affine() {
        let top = window.clamp(0, 40) as u64;
        let g = PreciseGrowth::new(cd, PreciseGrowth::digits_for(cd, top)).expect("hyperbolic");
        let mut growth = CheckResult::new("core: growth envelopes of η, γ");
        for j in 0..=top {
            let c = g.check(cd, j);
            growth.record(c.eta_within && c.gamma_within, || format!("j = {j}: {c:?}"));
        }
        r.push(growth);
    }
    r
}

/// Interleaving of the sequences for hyperbolic `cd`.
fn staircase(cd: &CartanData, top: i64) -> CheckResult {
    let mut c = CheckResult::new("core: staircase interleaving");
    if cd.is_affine() {
        return c;
    }
    let f = if cd.a() >= cd.b() { *cd } else { cd.mirror() };
    let b = BigInt::from(f.b());
    if f.b() > 1 {
        for j in 0..=top {
            let e = eta(&f, j);
            let ok = &b * gamma(&f, j) < e && e < &b * gamma(&f, j + 1);
            c.record(ok, || format!("j = {j}"));
        }
    } else {
        for j in 1..=top {
            let e = eta(&f, j);
            c.record(gamma(&f, j + 1) < e && e < gamma(&f, j + 2), || format!("j = {j}"));
        }
    }
    c
}

/// Real sums, root strings and the length rule.
pub fn sums_suite(cd: &CartanData, window: i64) -> Result<Report> {
    let scanned = scan_real_sums(cd, window);
    let predicted = predicted_real_sums(cd, window);
    let mut eq = CheckResult::new("sums: scan equals triple prediction");
    for p in scanned.union(&predicted) {
        let ok = scanned.contains(p) && predicted.contains(p);
        eq.record(ok, || format!("{} + {}", p.0, p.1));
    }
    let mut none = CheckResult::new("sums: no real sums when a, b > 1");
    if cd.a() > 1 && cd.b() > 1 {
        none.record(scanned.is_empty(), || format!("{} real sums found", scanned.len()));
    }
    let mut len = CheckResult::new("sums: length rule");
    for &(u, v) in &scanned {
        let sum = sum_class(cd, u, v).real().expect("scanned sums are real");
        let want = if is_long(cd, sum) { SumLength::SumLong } else { SumLength::SumShort };
        len.record(sum_length_rule(cd, u, v) == want, || format!("{u} + {v}"));
    }
    let mut pq = CheckResult::new("sums: p - q = ⟨β, α^∨⟩ and strings are unbroken");
    let small = window.min(6);
    for u in real_roots(small) {
        for v in real_roots(small) {
            if v == u || v == negate(u) {
                continue;
            }
            let s = root_string(cd, u, v)?;
            let n = pairing(cd, &coords(cd, v), u);
            let unbroken = string_unbroken(cd, u, v, -&s.p, s.q.clone());
            let ok = &s.p - &s.q == n && unbroken;
            pq.record(ok, || format!("{u} through {v}: p = {}, q = {}, pairing {n}", s.p, s.q));
        }
    }
    let mut r = Report::new();
    for c in [eq, none, len, pq] {
        r.push(c);
    }
    Ok(r)
}

/// Every `β + kα`, `lo <= k <= hi`, is a root. `Q(β + kα)` is convex in `k`,
/// so once the real ends are stripped the rest is imaginary as soon as its two
/// end points are.
fn string_unbroken(cd: &CartanData, alpha: RealRoot, beta: RealRoot, mut lo: BigInt, mut hi: BigInt) -> bool {
    let av = coords(cd, alpha);
    let bv = coords(cd, beta);
    let at = |k: &BigInt| classify(cd, &(&bv + &av.scale(k)));
    while lo <= hi && matches!(at(&lo), RootClass::Real(_)) {
        lo += 1;
    }
    while hi >= lo && matches!(at(&hi), RootClass::Real(_)) {
        hi -= 1;
    }
    lo > hi || (at(&lo) == RootClass::Imaginary && at(&hi) == RootClass::Imaginary)
}

/// Deterministic generator sets drawn from roots with `|j| <= reach`.
fn generator_sets(reach: i64) -> Vec<Vec<RealRoot>> {
    let roots: Vec<_> = real_roots(reach).collect();
    let mut sets: Vec<Vec<RealRoot>> = roots.iter().map(|&r| vec![r]).collect();
    for (i, &u) in roots.iter().enumerate() {
        for &v in &roots[i + 1..] {
            if v != negate(u) {
                sets.push(vec![u, v]);
            }
        }
    }
    for (i, w) in roots.windows(3).enumerate() {
        if i % 2 == 0 {
            sets.push(w.to_vec());
        }
    }
    sets
}

/// Φ- and Δ^re-subsystem predictions against their oracles, plus the
/// divisibility identities.
pub fn subsystems_suite(cd: &CartanData, window: i64) -> Result<Report> {
    let reach = (window / 4).clamp(0, 3);
    let roots: Vec<_> = real_roots(window).collect();
    let mut phi = CheckResult::new("subsystems: Φ prediction equals reflection closure");
    let mut delta = CheckResult::new("subsystems: Δ^re prediction equals lattice membership");
    let mut typing = CheckResult::new("subsystems: Cartan type of Φ(Γ)");
    for gens in generator_sets(reach) {
        let p = phi_subsystem(cd, &gens)?;
        let closure = phi_closure_oracle(&gens, window);
        let ok = roots.iter().all(|&r| p.contains(r) == closure.contains(&r));
        phi.record(ok, || format!("{gens:?} -> {}", p.shape));
        let d = delta_re_subsystem(cd, &gens)?;
        let ok = roots.iter().all(|&r| d.contains(r) == delta_re_membership_oracle(cd, &gens, r));
        delta.record(ok, || format!("{gens:?} -> {}", d.shape));
        if let Some((x, y)) = p.cartan_type() {
            let prod = &x * &y;
            let ok = if cd.is_affine() { prod >= BigInt::from(4) } else { prod > BigInt::from(4) };
            typing.record(ok, || format!("{gens:?}: H({x},{y})"));
        } else {
            typing.record(p.simple_roots.len() == 1, || format!("{gens:?}: no Cartan type"));
        }
    }
    let mut r = Report::new();
    r.push(phi);
    r.push(delta);
    r.push(typing);
    r.extend(divisibility_suite(cd, 8, window.clamp(1, 24)));
    Ok(r)
}

/// Consistency of structure constants, or their absence for `a, b > 1`.
pub fn signs_suite(cd: &CartanData, signs: &SignAssignment, window: i64) -> Result<Report> {
    let mut r = Report::new();
    if matches!(signs, SignAssignment::Trivial) {
        let mut c = CheckResult::new("signs: no real-valued commutators");
        for u in real_roots(window) {
            for v in real_roots(window) {
                if v != negate(u) {
                    let res = n_value(cd, signs, u, v)?;
                    c.record(!matches!(res, CommutatorResult::RealVector { .. }), || format!("[{u}, {v}]"));
                }
            }
        }
        r.push(c);
        return Ok(r);
    }
    let mut es = CheckResult::new("signs: one extraspecial pair per decomposable root");
    let pairs = special_pairs(cd, 2 * window + 1);
    for d in decomposables(cd, window / 2) {
        let count = pairs
            .iter()
            .filter(|p| p.extraspecial && sum_class(cd, p.alpha, p.beta).real() == Some(d))
            .count();
        es.record(count == 1, || format!("{d}: {count}"));
    }
    r.push(es);
    r.extend(consistency_relations(cd, signs, window)?);
    Ok(r)
}

fn agrees(ours: &CommutatorResult, theirs: &OracleResult) -> bool {
    match (ours, theirs) {
        (CommutatorResult::Zero, OracleResult::Zero) => true,
        (CommutatorResult::RealVector { n, root }, OracleResult::RealVector { n: m, root: s }) => {
            root == s && BigInt::from(*n) == *m
        }
        (CommutatorResult::Coroot { c1, c2 }, OracleResult::Coroot { c1: d1, c2: d2 }) => c1 == d1 && c2 == d2,
        (CommutatorResult::ImaginarySpace { vector }, OracleResult::ImaginarySpace { vector: v, .. }) => vector == v,
        _ => false,
    }
}

/// Loop-algebra checks for `H(4,1)`; the oracle basis is rescaled to match `signs`.
pub fn oracle_suite(cd: &CartanData, signs: &SignAssignment, window: i64) -> Result<Report> {
    let rho = crate::structure::h41_rescaling(cd, signs, 3 * window + 3)?;
    let oracle = A22Oracle::rescaled_basis(&rho);
    let mut r = oracle.jacobi_check(window.min(8));
    r.extend(oracle.normalization_check(window));
    let mut matches = CheckResult::new("oracle: n_value equals loop bracket");
    let mut sizes = CheckResult::new("oracle: |n| = 4 short+short, 1 short+long");
    for u in real_roots(window) {
        for v in real_roots(window) {
            let ours = n_value(cd, signs, u, v)?;
            let theirs = oracle.oracle_n(u, v).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            matches.record(agrees(&ours, &theirs), || format!("[{u}, {v}]: {ours:?} vs {theirs:?}"));
            if let OracleResult::RealVector { n, .. } = &theirs {
                let want = if is_long(cd, u) || is_long(cd, v) { 1 } else { 4 };
                sizes.record(n.abs() == BigInt::from(want), || format!("[{u}, {v}]: {n}"));
            }
        }
    }
    r.push(matches);
    r.push(sizes);
    let mut pattern = CheckResult::new("oracle: s(SB_r, SB_s) = (-1)^r in the loop basis");
    let standard = A22Oracle::standard();
    for fam in [Family::SU, Family::SL] {
        for i in 0..=window {
            for k in 0..=window {
                let (x, y) = (RealRoot::new(fam, i), RealRoot::new(fam, k));
                if let Ok(OracleResult::RealVector { n, .. }) = standard.oracle_n(x, y) {
                    let want = if i % 2 == 0 { 4 } else { -4 };
                    pattern.record(n == BigInt::from(want), || format!("[{x}, {y}] = {n}"));
                }
            }
        }
    }
    r.push(pattern);
    Ok(r)
}
