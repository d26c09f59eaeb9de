//! Sums of real roots: when they are real, the triples they form, and root strings.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::roots::{classify, coords, is_long, negate, pairing, q_form, Family, RealRoot, RootClass};

/// `β - pα, …, β + qα`. Both ends can be astronomically far out when the
/// string crosses a run of imaginary roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootString {
    pub p: BigInt,
    pub q: BigInt,
}

/// Three real roots summing to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealTriple {
    pub alpha: RealRoot,
    pub beta: RealRoot,
    pub gamma: RealRoot,
}

impl RealTriple {
    pub fn roots(&self) -> [RealRoot; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    /// All six ordered pairs `(u, v)` from the triple; each has `u + v = -(third)`.
    pub fn ordered_pairs(&self) -> [(RealRoot, RealRoot); 6] {
        let [a, b, c] = self.roots();
        [(a, b), (b, a), (a, c), (c, a), (b, c), (c, b)]
    }

    pub fn negated(&self) -> RealTriple {
        RealTriple { alpha: negate(self.alpha), beta: negate(self.beta), gamma: negate(self.gamma) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleRoot {
    Alpha1,
    Alpha2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumLength {
    SumLong,
    SumShort,
    SumNotReal,
}

/// Class of `α + β`.
pub fn sum_class(cd: &CartanData, alpha: RealRoot, beta: RealRoot) -> RootClass {
    classify(cd, &(coords(cd, alpha) + coords(cd, beta)))
}

/// The positive real roots `β` with `β ± α_i` real, for `H(a,1)` with `a > 4`.
pub fn sums_with_simple(cd: &CartanData, i: SimpleRoot, positive: bool) -> Result<Vec<RealRoot>> {
    if cd.b() != 1 || cd.a() <= 4 {
        return Err(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "sums with a simple root are tabulated for H(a,1), a > 4" });
    }
    use Family::*;
    let r = RealRoot::new;
    Ok(match (i, positive) {
        // β + α₁: β = α₂
        (SimpleRoot::Alpha1, true) => vec![r(SU, 0)],
        // β - α₁: β = α₁ + α₂
        (SimpleRoot::Alpha1, false) => vec![r(SL, 0)],
        // β + α₂: β = α₁ or α₁ + (a-1)α₂
        (SimpleRoot::Alpha2, true) => vec![r(LL, 0), r(SU, 1)],
        // β - α₂: β = α₁ + α₂ or α₁ + aα₂
        (SimpleRoot::Alpha2, false) => vec![r(SL, 0), r(LU, 0)],
    })
}

fn triples_b1(a: i64, range: &RangeInclusive<i64>) -> Vec<RealTriple> {
    use Family::*;
    let r = RealRoot::new;
    let mut out = Vec::new();
    if a > 4 {
        for j in range.clone() {
            out.push(RealTriple { alpha: r(SU, j), beta: r(SU, j + 1), gamma: negate(r(LU, j)) });
            out.push(RealTriple { alpha: r(SL, j), beta: r(SL, j + 1), gamma: negate(r(LL, j + 1)) });
        }
    } else {
        for k in range.clone() {
            for j in range.clone().filter(|&j| j <= k) {
                let m = 2 * k + 1 - j;
                out.push(RealTriple { alpha: r(SU, j), beta: r(SU, m), gamma: negate(r(LU, k)) });
                out.push(RealTriple { alpha: r(SL, j), beta: r(SL, m), gamma: negate(r(LL, k + 1)) });
            }
        }
    }
    out
}

/// Triples of real roots summing to zero.
///
/// For `H(a,1)`, `a > 4`, `j` runs over `range`; for `H(4,1)` both `j` and `k`
/// run over `range` with `j <= k`. Empty when `a, b > 1`.
pub fn triples(cd: &CartanData, range: RangeInclusive<i64>) -> Vec<RealTriple> {
    if cd.b() == 1 {
        triples_b1(cd.a(), &range)
    } else if cd.a() == 1 {
        triples_b1(cd.b(), &range)
            .into_iter()
            .map(|t| RealTriple { alpha: t.alpha.mirror(), beta: t.beta.mirror(), gamma: t.gamma.mirror() })
            .collect()
    } else {
        Vec::new()
    }
}

/// Ordered pairs with both indices in `|j| <= window` whose sum is real, by exhaustive scan.
pub fn scan_real_sums(cd: &CartanData, window: i64) -> BTreeSet<(RealRoot, RealRoot)> {
    let roots: Vec<_> = crate::roots::real_roots(window).collect();
    let vecs: Vec<_> = roots.iter().map(|&r| coords(cd, r)).collect();
    let mut out = BTreeSet::new();
    for (i, &u) in roots.iter().enumerate() {
        for (k, &v) in roots.iter().enumerate() {
            if let RootClass::Real(_) = classify(cd, &(&vecs[i] + &vecs[k])) {
                out.insert((u, v));
            }
        }
    }
    out
}

/// Ordered pairs with both indices in `|j| <= window` predicted to have a real sum by [`triples`].
pub fn predicted_real_sums(cd: &CartanData, window: i64) -> BTreeSet<(RealRoot, RealRoot)> {
    // A triple with two entries in the window has its parameters within 3·window + 3 of zero.
    let reach = 3 * window + 3;
    let mut out = BTreeSet::new();
    for t in triples(cd, -reach..=reach) {
        for (u, v) in t.ordered_pairs() {
            if u.j.abs() <= window && v.j.abs() <= window {
                out.insert((u, v));
            }
        }
    }
    out
}

/// Largest `K >= k0` with `Q(β + sKα) <= 0`, given that `Q(β + s·k0·α) <= 0`.
fn end_of_imaginary_run(qa: &BigInt, qb: &BigInt, sn: &BigInt, k0: &BigInt) -> BigInt {
    // Q(β + sKα) = Qβ + Qα(K² + s·n·K), with n = ⟨β, α^∨⟩.
    let g = |k: &BigInt| -> BigInt { qb + qa * (k * k + sn * k) };
    let disc = sn * sn * qa * qa - BigInt::from(4) * qa * qb;
    let root = if disc.is_negative() { BigInt::zero() } else { disc.sqrt() };
    let guess: BigInt = (-(sn * qa) + root) / (BigInt::from(2) * qa);
    let mut k = guess.max(k0.clone());
    while !g(&(&k + 1)).is_positive() {
        k += 1;
    }
    while &k > k0 && g(&k).is_positive() {
        k -= 1;
    }
    k
}

/// The α-string through β.
///
/// Steps outward from β; a run of imaginary roots is skipped in one jump by
/// solving the quadratic `Q(β + kα) <= 0`, so strings with a long imaginary
/// middle cost only a few classifications.
pub fn root_string(cd: &CartanData, alpha: RealRoot, beta: RealRoot) -> Result<RootString> {
    let av = coords(cd, alpha);
    let bv = coords(cd, beta);
    if alpha == beta || alpha == negate(beta) {
        return Err(Error::ProportionalRoots(alpha, beta));
    }
    let qa = q_form(cd, &av);
    let qb = q_form(cd, &bv);
    let n = pairing(cd, &bv, alpha);
    let walk = |sign: i64| -> BigInt {
        let sn = &n * sign;
        let mut k = BigInt::one();
        let mut real_run = 0;
        loop {
            let v = &bv + &av.scale(&(&k * sign));
            match classify(cd, &v) {
                RootClass::Real(_) => {
                    real_run += 1;
                    // Outside the imaginary run Q(β + kα) is monotone in k and meets {a, b}
                    // at most twice on each side.
                    assert!(real_run <= 8, "runaway real string: {alpha} through {beta} in {cd}");
                    k += 1;
                }
                RootClass::Imaginary => {
                    real_run = 0;
                    k = end_of_imaginary_run(&qa, &qb, &sn, &k) + 1;
                }
                RootClass::NotARoot | RootClass::Zero => return k - 1,
            }
        }
    };
    Ok(RootString { p: walk(-1), q: walk(1) })
}

/// Length of `α + β` from the lengths of `α` and `β`.
pub fn sum_length_rule(cd: &CartanData, alpha: RealRoot, beta: RealRoot) -> SumLength {
    if sum_class(cd, alpha, beta).real().is_none() {
        return SumLength::SumNotReal;
    }
    match (is_long(cd, alpha), is_long(cd, beta)) {
        (false, false) => SumLength::SumLong,
        (true, false) | (false, true) => SumLength::SumShort,
        (true, true) => SumLength::SumNotReal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Family::*;

    fn cd(a: i64, b: i64) -> CartanData {
        CartanData::new(a, b).unwrap()
    }

    fn r(f: Family, j: i64) -> RealRoot {
        RealRoot::new(f, j)
    }

    #[test]
    fn sum_class_examples() {
        let c = cd(5, 1);
        assert_eq!(sum_class(&c, r(SU, 0), r(LL, 0)), RootClass::Real(r(SL, 0)));
        assert_eq!(sum_class(&c, r(LU, 3), negate(r(LU, 3))), RootClass::Zero);
    }

    #[test]
    fn sums_with_simple_examples() {
        let c = cd(5, 1);
        assert_eq!(sums_with_simple(&c, SimpleRoot::Alpha1, true).unwrap(), vec![r(SU, 0)]);
        assert_eq!(sums_with_simple(&c, SimpleRoot::Alpha2, true).unwrap(), vec![r(LL, 0), r(SU, 1)]);
        assert_eq!(sums_with_simple(&c, SimpleRoot::Alpha2, false).unwrap(), vec![r(SL, 0), r(LU, 0)]);
        assert!(sums_with_simple(&cd(4, 1), SimpleRoot::Alpha1, true).is_err());
    }

    #[test]
    fn triple_examples() {
        assert!(triples(&cd(2, 2), -5..=5).is_empty());
        let t = triples(&cd(5, 1), 0..=0);
        assert_eq!(t[0], RealTriple { alpha: r(SU, 0), beta: r(SU, 1), gamma: r(LL, -1) });
        let t4 = triples(&cd(4, 1), 0..=1);
        assert!(t4.contains(&RealTriple { alpha: r(SU, 0), beta: r(SU, 3), gamma: negate(r(LU, 1)) }));
    }

    #[test]
    fn triples_sum_to_zero() {
        for c in [cd(5, 1), cd(4, 1), cd(1, 5), cd(1, 4)] {
            for t in triples(&c, -4..=4) {
                let s = coords(&c, t.alpha) + coords(&c, t.beta) + coords(&c, t.gamma);
                assert!(s.is_zero(), "{t:?} in {c}");
            }
        }
    }

    #[test]
    fn string_examples() {
        let c = cd(5, 1);
        assert_eq!(root_string(&c, r(SU, 0), r(SU, 1)).unwrap(), RootString { p: 4.into(), q: 1.into() });
        assert_eq!(root_string(&cd(4, 1), r(SU, 0), r(SU, 1)).unwrap().p, BigInt::from(3));
        assert_eq!(root_string(&c, r(SU, 0), r(LL, -1)).unwrap().p, BigInt::from(0));
        assert!(root_string(&c, r(SU, 0), r(SL, -1)).is_err());
    }

    #[test]
    fn long_imaginary_middle_is_skipped() {
        // A string through a root far from α passes through a long run of imaginary roots.
        let c = cd(5, 1);
        let (alpha, beta) = (r(SU, 0), r(LL, 6));
        let s = root_string(&c, alpha, beta).unwrap();
        let n = pairing(&c, &coords(&c, beta), alpha);
        assert_eq!(&s.p - &s.q, n);
        assert!(&s.p + &s.q > BigInt::from(100), "{s:?}");
    }

    #[test]
    fn length_rule_examples() {
        let c = cd(5, 1);
        assert_eq!(sum_length_rule(&c, r(SU, 0), r(SU, 1)), SumLength::SumLong);
        assert_eq!(sum_length_rule(&c, r(SU, 0), r(LL, 0)), SumLength::SumShort);
        assert_eq!(sum_length_rule(&c, r(LL, 0), r(LU, 0)), SumLength::SumNotReal);
    }
}
