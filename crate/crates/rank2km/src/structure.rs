//! Structure constants `n_{α,β}` between real root vectors.
//!
//! Only `H(a,1)` (`a >= 4`) and its mirror `H(1,a)` have real roots whose sum is
//! real. For those, a [`SignAssignment`] fixes the signs on the extraspecial
//! pairs and every other sign follows from the triple relations.
//!
//! Signs on a triple `α + β + γ = 0` (two of them positive, `α < β`) satisfy
//! `s_{α,β} = s_{β,γ} = s_{γ,α} = -s_{β,α}`, and negating all roots flips the
//! sign: `n_{-α,-β} = -n_{α,β}` when `x_{-α} = -ω(x_α)`.
//!
//! The sign of a positive pair is computed in two ways:
//! * `H(a,1)`, `a > 4`: each decomposable root has exactly one special pair, so
//!   its sign is an input.
//! * `H(4,1)`: every sign is the loop-algebra sign times `r(ξ)r(ζ)r(ξ+ζ)`,
//!   where the rescaling `r` is solved along the extraspecial pairs so that each
//!   extraspecial sign matches its input. All inputs `+1` give `r ≡ 1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::lattice::RootVector;
use crate::report::{CheckResult, Report};
use crate::roots::{
    classify, coords, coroot_coords, negate, norm_squared, positive_real_roots, real_roots, root_order_key, Family,
    RealRoot, RootClass,
};
use crate::sums::{root_string, scan_real_sums, sum_class, triples};

/// Which sign machinery applies to a Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignModel {
    /// `H(a,1)` or `H(1,a)` with `a > 4`.
    Ha1,
    /// `H(4,1)` or `H(1,4)`.
    H41,
    /// `a, b > 1`: no real root is a sum of two real roots.
    Trivial,
}

impl SignModel {
    pub fn of(cd: &CartanData) -> SignModel {
        let big = cd.a().max(cd.b());
        if cd.a().min(cd.b()) > 1 {
            SignModel::Trivial
        } else if big == 4 {
            SignModel::H41
        } else {
            SignModel::Ha1
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignModel::Ha1 => "Ha1",
            SignModel::H41 => "H41",
            SignModel::Trivial => "Trivial",
        }
    }
}

/// The `b = 1` frame: `H(1,a)` is handled as `H(a,1)` with mirrored labels.
#[derive(Debug, Clone, Copy)]
struct Frame {
    cd: CartanData,
    mirrored: bool,
}

impl Frame {
    fn of(cd: &CartanData) -> Option<Frame> {
        if cd.b() == 1 {
            Some(Frame { cd: *cd, mirrored: false })
        } else if cd.a() == 1 {
            Some(Frame { cd: cd.mirror(), mirrored: true })
        } else {
            None
        }
    }

    fn to_frame(&self, r: RealRoot) -> RealRoot {
        if self.mirrored {
            r.mirror()
        } else {
            r
        }
    }

    fn from_frame(&self, r: RealRoot) -> RealRoot {
        self.to_frame(r)
    }

    fn key(&self, r: RealRoot) -> u64 {
        root_order_key(&self.cd, r).expect("frame has b = 1 and r is positive")
    }
}

/// Free signs on extraspecial pairs. Unlisted inputs default to `+1`.
///
/// Inputs are written in the `b = 1` labelling; for `H(1,a)` the families are
/// mirrored (`LL ↔ SU`, `LU ↔ SL`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignAssignment {
    /// `s^{UL} = s_{SU0,LL0}`, `s^U_j = s_{SU_j,SU_{j+1}}`, `s^L_j = s_{SL_j,SL_{j+1}}`.
    Ha1 { s_ul: i8, s_u: BTreeMap<i64, i8>, s_l: BTreeMap<i64, i8> },
    /// Extraspecial signs keyed by their decomposable sum: `long` holds `LU_k`
    /// (`k >= 0`) and `LL_k` (`k >= 1`), `short` holds `SL_m` (`m >= 0`) and
    /// `SU_m` (`m >= 2`). The value is the input sign; see [`h41_extraspecial`].
    H41 { long: BTreeMap<RealRoot, i8>, short: BTreeMap<RealRoot, i8> },
    Trivial,
}

fn check_sign(sign: i8) -> Result<i8> {
    if sign == 1 || sign == -1 {
        Ok(sign)
    } else {
        Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {sign}")))
    }
}

fn parse_index(key: &str, s: &str) -> Result<i64> {
    s.parse().map_err(|_| Error::InvalidArgument(format!("bad index in sign key {key:?}")))
}

impl SignAssignment {
    /// All inputs `+1` for the model of `cd`.
    pub fn all_plus(cd: &CartanData) -> SignAssignment {
        match SignModel::of(cd) {
            SignModel::Ha1 => SignAssignment::Ha1 { s_ul: 1, s_u: BTreeMap::new(), s_l: BTreeMap::new() },
            SignModel::H41 => SignAssignment::H41 { long: BTreeMap::new(), short: BTreeMap::new() },
            SignModel::Trivial => SignAssignment::Trivial,
        }
    }

    pub fn model(&self) -> SignModel {
        match self {
            SignAssignment::Ha1 { .. } => SignModel::Ha1,
            SignAssignment::H41 { .. } => SignModel::H41,
            SignAssignment::Trivial => SignModel::Trivial,
        }
    }

    /// Errors unless the variant matches the model of `cd`.
    pub fn validate(&self, cd: &CartanData) -> Result<()> {
        if self.model() == SignModel::of(cd) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{} sign assignment does not apply to {cd} (expected {})",
                self.model().as_str(),
                SignModel::of(cd).as_str()
            )))
        }
    }

    /// Sets one input. Keys: `UL`, `U:j`, `L:j` for `Ha1`; `LU:k`, `LL:k`, `SL:m`,
    /// `SU:m` for `H41`.
    pub fn set(&mut self, key: &str, sign: i8) -> Result<()> {
        let sign = check_sign(sign)?;
        let model = self.model().as_str();
        let bad = || Error::InvalidArgument(format!("sign key {key:?} does not apply to a {model} assignment"));
        match self {
            SignAssignment::Ha1 { s_ul, s_u, s_l } => {
                if key == "UL" {
                    *s_ul = sign;
                    return Ok(());
                }
                let (head, idx) = key.split_once(':').ok_or_else(bad)?;
                let j = parse_index(key, idx)?;
                if j < 0 {
                    return Err(Error::InvalidArgument(format!("index must be >= 0 in {key:?}")));
                }
                match head {
                    "U" => s_u.insert(j, sign),
                    "L" => s_l.insert(j, sign),
                    _ => return Err(bad()),
                };
                Ok(())
            }
            SignAssignment::H41 { long, short } => {
                let root: RealRoot = key.parse().map_err(|_| bad())?;
                if !is_h41_decomposable(root) {
                    return Err(Error::InvalidArgument(format!("{key} is not a decomposable root of H(4,1)")));
                }
                if root.family.in_alpha1_orbit() {
                    long.insert(root, sign);
                } else {
                    short.insert(root, sign);
                }
                Ok(())
            }
            SignAssignment::Trivial => Err(bad()),
        }
    }

    /// Builds an assignment for `cd` from `(key, sign)` overrides.
    pub fn from_overrides<'a>(cd: &CartanData, overrides: impl IntoIterator<Item = (&'a str, i8)>) -> Result<Self> {
        let mut s = SignAssignment::all_plus(cd);
        for (k, v) in overrides {
            s.set(k, v)?;
        }
        Ok(s)
    }

    /// The explicitly stored inputs as `(key, sign)`.
    pub fn overrides(&self) -> Vec<(String, i8)> {
        match self {
            SignAssignment::Ha1 { s_ul, s_u, s_l } => std::iter::once(("UL".to_string(), *s_ul))
                .chain(s_u.iter().map(|(j, s)| (format!("U:{j}"), *s)))
                .chain(s_l.iter().map(|(j, s)| (format!("L:{j}"), *s)))
                .collect(),
            SignAssignment::H41 { long, short } => {
                long.iter().chain(short.iter()).map(|(r, s)| (r.to_string(), *s)).collect()
            }
            SignAssignment::Trivial => Vec::new(),
        }
    }

    /// Input keys whose pairs lie within `|j| <= window`.
    pub fn keys(model: SignModel, window: i64) -> Vec<String> {
        match model {
            SignModel::Ha1 => std::iter::once("UL".to_string())
                .chain((0..window).map(|j| format!("U:{j}")))
                .chain((0..window).map(|j| format!("L:{j}")))
                .collect(),
            SignModel::H41 => positive_real_roots(window)
                .filter(|&r| is_h41_decomposable(r))
                .map(|r| r.to_string())
                .collect(),
            SignModel::Trivial => Vec::new(),
        }
    }

    fn ha1_input(&self, gamma: RealRoot) -> i8 {
        match self {
            SignAssignment::Ha1 { s_ul, s_u, s_l } => match gamma.family {
                Family::SL => *s_ul,
                Family::LU => *s_u.get(&gamma.j).unwrap_or(&1),
                Family::LL => *s_l.get(&(gamma.j - 1)).unwrap_or(&1),
                Family::SU => unreachable!("SU roots are not decomposable in H(a,1)"),
            },
            _ => unreachable!("validated before use"),
        }
    }

    fn h41_input(&self, gamma: RealRoot) -> i8 {
        match self {
            SignAssignment::H41 { long, short } => *long.get(&gamma).or_else(|| short.get(&gamma)).unwrap_or(&1),
            _ => unreachable!("validated before use"),
        }
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.model().as_str())?;
        for (k, s) in self.overrides() {
            write!(f, " {k}={s:+}")?;
        }
        Ok(())
    }
}

/// `[x_α, x_β]` expressed in the root vector basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutatorResult {
    Zero,
    RealVector { n: i64, root: RealRoot },
    Coroot { c1: BigInt, c2: BigInt },
    /// The sum is imaginary; only the weight is reported.
    ImaginarySpace { vector: RootVector },
}

/// `(α, β)` with `α, β, α+β` positive real and `α < β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpecialPair {
    pub alpha: RealRoot,
    pub beta: RealRoot,
    pub extraspecial: bool,
}

fn is_h41_decomposable(r: RealRoot) -> bool {
    r.is_positive()
        && !matches!((r.family, r.j), (Family::LL, 0) | (Family::SU, 0) | (Family::SU, 1))
}

/// The extraspecial pair of a decomposable root of `H(a,1)`, `a > 4`.
pub fn ha1_extraspecial(gamma: RealRoot) -> Option<(RealRoot, RealRoot)> {
    let r = RealRoot::new;
    match (gamma.family, gamma.j) {
        (Family::SL, 0) => Some((r(Family::SU, 0), r(Family::LL, 0))),
        (Family::LU, j) if j >= 0 => Some((r(Family::SU, j), r(Family::SU, j + 1))),
        (Family::LL, j) if j >= 1 => Some((r(Family::SL, j - 1), r(Family::SL, j))),
        _ => None,
    }
}

/// The extraspecial pair of a decomposable root of `H(4,1)`.
pub fn h41_extraspecial(gamma: RealRoot) -> Option<(RealRoot, RealRoot)> {
    let r = RealRoot::new;
    if !is_h41_decomposable(gamma) {
        return None;
    }
    let j = gamma.j;
    Some(match gamma.family {
        Family::LU => (r(Family::SU, 0), r(Family::SU, 2 * j + 1)),
        Family::LL => (r(Family::SL, 0), r(Family::SL, 2 * j - 1)),
        Family::SL => (r(Family::SU, j % 2), r(Family::LL, j / 2)),
        Family::SU => (r(Family::SL, j % 2), r(Family::LU, (j - 2) / 2)),
    })
}

/// Sign of `[x_u, x_v]` in the unrescaled loop basis of `H(4,1)`, for positive
/// `u, v` with real sum.
fn h41_loop_sign(u: RealRoot, v: RealRoot) -> i8 {
    let parity = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
    match (u.family, v.family) {
        (Family::SU, Family::SU) | (Family::SL, Family::SL) => parity(u.j),
        (Family::SL, Family::LU) | (Family::SU, Family::LL) => parity(u.j + 1),
        (Family::LU, Family::SL) | (Family::LL, Family::SU) => -parity(v.j + 1),
        _ => unreachable!("{u} + {v} is not a real root of H(4,1)"),
    }
}

/// Sign that the extraspecial pair of `gamma` must carry, given its input.
///
/// Short sums of even index carry the opposite of the input, so that all
/// inputs `+1` reproduce the loop basis.
fn h41_target(gamma: RealRoot, input: i8) -> i8 {
    match gamma.family {
        Family::SU | Family::SL if gamma.j % 2 == 0 => -input,
        _ => input,
    }
}

/// The rescaling `r` on positive roots with order key at most `max_key`.
fn h41_rho(frame: &Frame, signs: &SignAssignment, max_key: u64) -> HashMap<RealRoot, i8> {
    let bound = (max_key / 6) as i64 + 1;
    let mut roots: Vec<_> = positive_real_roots(bound).filter(|&r| frame.key(r) <= max_key).collect();
    roots.sort_by_key(|&r| frame.key(r));
    let mut rho = HashMap::with_capacity(roots.len());
    for gamma in roots {
        let value = match h41_extraspecial(gamma) {
            None => 1,
            Some((xi, zeta)) => {
                let want = h41_target(gamma, signs.h41_input(gamma));
                want * h41_loop_sign(xi, zeta) * rho[&xi] * rho[&zeta]
            }
        };
        rho.insert(gamma, value);
    }
    rho
}

/// The rescaling `r(α) ∈ {±1}` on positive roots with `j <= window` that turns
/// the loop basis of `H(4,1)` into one with the given extraspecial signs.
/// Labels are those of `cd` (mirrored for `H(1,4)`).
pub fn h41_rescaling(cd: &CartanData, signs: &SignAssignment, window: i64) -> Result<BTreeMap<RealRoot, i8>> {
    signs.validate(cd)?;
    if signs.model() != SignModel::H41 {
        return Err(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "rescaling is defined for H(4,1) only" });
    }
    let frame = Frame::of(cd).expect("H41 model has a b = 1 frame");
    let max_key = positive_real_roots(window).map(|r| frame.key(r)).max().unwrap_or(0);
    let rho = h41_rho(&frame, signs, max_key);
    Ok(positive_real_roots(window).map(|r| (frame.from_frame(r), rho[&r])).collect())
}

/// Sign of a positive pair `ξ < ζ` in frame labels.
fn positive_pair_sign(frame: &Frame, signs: &SignAssignment, xi: RealRoot, zeta: RealRoot, gamma: RealRoot) -> i8 {
    match signs.model() {
        SignModel::Ha1 => {
            debug_assert_eq!(ha1_extraspecial(gamma), Some((xi, zeta)));
            signs.ha1_input(gamma)
        }
        SignModel::H41 => {
            let rho = h41_rho(frame, signs, frame.key(gamma));
            h41_loop_sign(xi, zeta) * rho[&xi] * rho[&zeta] * rho[&gamma]
        }
        SignModel::Trivial => unreachable!("trivial model has no real sums"),
    }
}

/// `s_{α,β}` with `n_{α,β} = s_{α,β}(p_{α,β}+1)`.
pub fn sign_of(cd: &CartanData, signs: &SignAssignment, alpha: RealRoot, beta: RealRoot) -> Result<i8> {
    signs.validate(cd)?;
    let Some(sum) = sum_class(cd, alpha, beta).real() else {
        return Err(Error::SumNotReal(alpha, beta));
    };
    let frame = Frame::of(cd)
        .ok_or(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "no real root is a sum of two real roots" })?;
    let (mut u, mut v) = (frame.to_frame(alpha), frame.to_frame(beta));
    let mut w = negate(frame.to_frame(sum));
    // Normalise the triple {u, v, w} to have two positive members.
    let mut flip = 1;
    if [u, v, w].iter().filter(|r| r.is_positive()).count() < 2 {
        (u, v, w) = (negate(u), negate(v), negate(w));
        flip = -1;
    }
    let mut pos: Vec<RealRoot> = [u, v, w].into_iter().filter(|r| r.is_positive()).collect();
    pos.sort_by_key(|&r| frame.key(r));
    let (a, b) = (pos[0], pos[1]);
    let g = [u, v, w].into_iter().find(|r| !r.is_positive()).expect("one negative root");
    let s = positive_pair_sign(&frame, signs, a, b, negate(g));
    // s = s_{α,β} = s_{β,γ} = s_{γ,α}; the reversed pairs carry -s.
    let cyclic = (u, v) == (a, b) || (u, v) == (b, g) || (u, v) == (g, a);
    Ok(flip * if cyclic { s } else { -s })
}

/// `p` of the α-string through β when `α + β` is real; such strings are short.
fn short_p(cd: &CartanData, alpha: RealRoot, beta: RealRoot) -> Result<i64> {
    Ok(root_string(cd, alpha, beta)?.p.to_i64().expect("string through a real sum has small p"))
}

/// Evaluates `[x_α, x_β]`.
pub fn n_value(cd: &CartanData, signs: &SignAssignment, alpha: RealRoot, beta: RealRoot) -> Result<CommutatorResult> {
    signs.validate(cd)?;
    if beta == negate(alpha) {
        let (c1, c2) = coroot_coords(cd, alpha);
        return Ok(CommutatorResult::Coroot { c1, c2 });
    }
    let sum = coords(cd, alpha) + coords(cd, beta);
    match classify(cd, &sum) {
        RootClass::Imaginary => Ok(CommutatorResult::ImaginarySpace { vector: sum }),
        RootClass::NotARoot | RootClass::Zero => Ok(CommutatorResult::Zero),
        RootClass::Real(root) => {
            let p = short_p(cd, alpha, beta)?;
            let s = sign_of(cd, signs, alpha, beta)? as i64;
            Ok(CommutatorResult::RealVector { n: s * (p + 1), root })
        }
    }
}

/// Special pairs with both indices at most `window`, sorted by `(α, β)` in the
/// root order. Empty unless `a = 1` or `b = 1`.
pub fn special_pairs(cd: &CartanData, window: i64) -> Vec<SpecialPair> {
    let Some(frame) = Frame::of(cd) else {
        return Vec::new();
    };
    let model = SignModel::of(cd);
    let mut roots: Vec<_> = positive_real_roots(window).collect();
    roots.sort_by_key(|&r| frame.key(r));
    let mut out = Vec::new();
    for (i, &u) in roots.iter().enumerate() {
        for &v in &roots[i + 1..] {
            let Some(gamma) = sum_class(&frame.cd, u, v).real() else {
                continue;
            };
            let extraspecial = match model {
                SignModel::Ha1 => true,
                _ => h41_extraspecial(gamma) == Some((u, v)),
            };
            out.push(SpecialPair { alpha: frame.from_frame(u), beta: frame.from_frame(v), extraspecial });
        }
    }
    out
}

/// Positive real roots with `j <= window` that are sums of two positive real
/// roots, in the root order. Empty unless `a = 1` or `b = 1`.
pub fn decomposables(cd: &CartanData, window: i64) -> Vec<RealRoot> {
    let Some(frame) = Frame::of(cd) else {
        return Vec::new();
    };
    let decomposable = |r: RealRoot| match SignModel::of(cd) {
        SignModel::Ha1 => ha1_extraspecial(r).is_some(),
        _ => is_h41_decomposable(r),
    };
    let mut out: Vec<_> = positive_real_roots(window).filter(|&r| decomposable(r)).collect();
    out.sort_by_key(|&r| frame.key(r));
    out.into_iter().map(|r| frame.from_frame(r)).collect()
}

/// The six derived sign families of the `H(4,1)` main theorem, for `k <= kmax`:
/// `U0:k = s_{SU0,SU_{2k+1}}`, `U1:k = -s_{SU1,SU_{2k}}`, `U2:k = s_{SU2,SU_{2k-1}}`
/// and the same with `SL` for `L0`, `L1`, `L2`.
pub fn theorem_aliases(cd: &CartanData, signs: &SignAssignment, kmax: i64) -> Result<Vec<(String, i8)>> {
    signs.validate(cd)?;
    let frame = Frame::of(cd)
        .filter(|_| signs.model() == SignModel::H41)
        .ok_or(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "aliases are defined for H(4,1) only" })?;
    let mut out = Vec::new();
    for (tag, fam) in [("U", Family::SU), ("L", Family::SL)] {
        let r = |j| frame.from_frame(RealRoot::new(fam, j));
        for k in 0..=kmax {
            out.push((format!("{tag}0:{k}"), sign_of(cd, signs, r(0), r(2 * k + 1))?));
        }
        for k in 1..=kmax {
            out.push((format!("{tag}1:{k}"), -sign_of(cd, signs, r(1), r(2 * k))?));
        }
        for k in 2..=kmax {
            out.push((format!("{tag}2:{k}"), sign_of(cd, signs, r(2), r(2 * k - 1))?));
        }
    }
    Ok(out)
}

/// Memoised `n_{α,β}` as an integer, zero when the sum is not real.
struct NTable<'a> {
    cd: &'a CartanData,
    signs: &'a SignAssignment,
    memo: HashMap<(RealRoot, RealRoot), i64>,
}

impl NTable<'_> {
    fn n(&mut self, u: RealRoot, v: RealRoot) -> Result<i64> {
        if let Some(&n) = self.memo.get(&(u, v)) {
            return Ok(n);
        }
        let n = match n_value(self.cd, self.signs, u, v)? {
            CommutatorResult::RealVector { n, .. } => n,
            _ => 0,
        };
        self.memo.insert((u, v), n);
        Ok(n)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Checks the antisymmetry, negation, triple and quadruple relations among real
/// roots with `|j| <= window`.
pub fn consistency_relations(cd: &CartanData, signs: &SignAssignment, window: i64) -> Result<Report> {
    signs.validate(cd)?;
    let mut table = NTable { cd, signs, memo: HashMap::new() };
    let norm = |r: RealRoot| norm_squared(cd, &coords(cd, r));
    let pairs = scan_real_sums(cd, window);

    let mut anti = CheckResult::new("n(α,β) = -n(β,α)");
    let mut neg = CheckResult::new("n(-α,-β) = -n(α,β)");
    let mut size = CheckResult::new("|n(α,β)| = p + 1");
    for &(u, v) in &pairs {
        let n = table.n(u, v)?;
        let p = short_p(cd, u, v)?;
        size.record(n.abs() == p + 1, || format!("{u}, {v}: n = {n}, p = {p}"));
        let nr = table.n(v, u)?;
        anti.record(n == -nr, || format!("{u}, {v}: {n} vs {nr}"));
        let nn = table.n(negate(u), negate(v))?;
        neg.record(n == -nn, || format!("{u}, {v}: {n} vs {nn}"));
    }

    let mut triple = CheckResult::new("n(α,β)/|γ|² = n(β,γ)/|α|² = n(γ,α)/|β|²");
    for t in triples(cd, -window..=window) {
        let [a, b, g] = t.roots();
        let x = rat(table.n(a, b)?) / norm(g);
        let y = rat(table.n(b, g)?) / norm(a);
        let z = rat(table.n(g, a)?) / norm(b);
        triple.record(x == y && y == z, || format!("({a}, {b}, {g}): {x}, {y}, {z}"));
    }

    let mut quad = CheckResult::new("quadruple relation");
    let roots: Vec<_> = real_roots(window).collect();
    for &(a, b) in &pairs {
        let ab = coords(cd, a) + coords(cd, b);
        for &g in &roots {
            let dv = -(&ab + &coords(cd, g));
            let d = match classify(cd, &dv) {
                RootClass::Real(d) if d.j.abs() <= window => d,
                _ => continue,
            };
            let four = [a, b, g, d];
            let antipodal = (0..4).any(|i| (i + 1..4).any(|k| four[i] == negate(four[k])));
            if antipodal {
                continue;
            }
            let bg = sum_class(cd, b, g);
            let ga = sum_class(cd, g, a);
            if matches!(bg, RootClass::Imaginary) || matches!(ga, RootClass::Imaginary) {
                continue;
            }
            let term = |t: &mut NTable, x: RealRoot, y: RealRoot, z: RealRoot, w: RealRoot| -> Result<BigRational> {
                let n1 = t.n(x, y)?;
                if n1 == 0 {
                    return Ok(BigRational::zero());
                }
                let s = coords(cd, x) + coords(cd, y);
                Ok(rat(n1 * t.n(z, w)?) / norm_squared(cd, &s))
            };
            let total = term(&mut table, a, b, g, d)? + term(&mut table, b, g, a, d)? + term(&mut table, g, a, b, d)?;
            quad.record(total.is_zero(), || format!("({a}, {b}, {g}, {d}): {total}"));
        }
    }

    let mut r = Report::new();
    for c in [size, anti, neg, triple, quad] {
        r.push(c);
    }
    Ok(r)
}
