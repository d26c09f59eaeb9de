//! Real roots of `H(a,b)`: the sequences γ, η, the four root families,
//! classification of lattice vectors, and the Weyl group action.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::lattice::{LatticeInt, RootVector};

/// The four real-root families. `LL`, `LU` form the orbit of α₁ and `SU`, `SL`
/// the orbit of α₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    LL,
    LU,
    SU,
    SL,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::LL, Family::LU, Family::SU, Family::SL];

    /// True for the α₁-orbit families `LL` and `LU`.
    pub fn in_alpha1_orbit(self) -> bool {
        matches!(self, Family::LL | Family::LU)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::LL => "LL",
            Family::LU => "LU",
            Family::SU => "SU",
            Family::SL => "SL",
        }
    }

    /// Family label after swapping α₁ and α₂ (`H(a,b)` → `H(b,a)`).
    pub fn mirror(self) -> Family {
        match self {
            Family::LL => Family::SU,
            Family::SU => Family::LL,
            Family::LU => Family::SL,
            Family::SL => Family::LU,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "LL" => Ok(Family::LL),
            "LU" => Ok(Family::LU),
            "SU" => Ok(Family::SU),
            "SL" => Ok(Family::SL),
            other => Err(Error::InvalidArgument(format!("unknown root family {other:?}"))),
        }
    }
}

/// A real root `α^F_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealRoot {
    pub family: Family,
    pub j: i64,
}

impl RealRoot {
    pub const fn new(family: Family, j: i64) -> Self {
        RealRoot { family, j }
    }

    pub fn is_positive(&self) -> bool {
        self.j >= 0
    }

    /// Orbit index: `LL j` and `LU -j-1` share index `j` (likewise `SU j`, `SL -j-1`).
    /// The flag is true when the root is `+α^{LL}_j` / `+α^{SU}_j` rather than its negative.
    pub fn orbit_index(&self) -> (i64, bool) {
        match self.family {
            Family::LL | Family::SU => (self.j, true),
            Family::LU | Family::SL => (-self.j - 1, false),
        }
    }

    /// Root with the given orbit, orbit index and sign; inverse of [`RealRoot::orbit_index`].
    pub fn from_orbit_index(alpha1_orbit: bool, index: i64, upper_sign: bool) -> RealRoot {
        let base = if alpha1_orbit { Family::LL } else { Family::SU };
        let root = RealRoot::new(base, index);
        if upper_sign {
            root
        } else {
            negate(root)
        }
    }

    pub fn mirror(&self) -> RealRoot {
        RealRoot::new(self.family.mirror(), self.j)
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.j)
    }
}

impl FromStr for RealRoot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (fam, idx) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("root spec {s:?} is not of the form FAMILY:index")))?;
        let family = fam.parse()?;
        let j = idx
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::InvalidArgument(format!("root index {idx:?}: {e}")))?;
        Ok(RealRoot::new(family, j))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    Real(RealRoot),
    Imaginary,
    NotARoot,
    Zero,
}

impl RootClass {
    pub fn is_root(&self) -> bool {
        matches!(self, RootClass::Real(_) | RootClass::Imaginary)
    }

    pub fn real(&self) -> Option<RealRoot> {
        match self {
            RootClass::Real(r) => Some(*r),
            _ => None,
        }
    }
}

/// Simple reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reflection {
    W1,
    W2,
}

/// A word in the simple reflections; `[w₁, w₂]` acts as `w₁·w₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    pub letters: Vec<Reflection>,
}

impl WeylWord {
    pub fn new(letters: Vec<Reflection>) -> Self {
        WeylWord { letters }
    }

    /// `(w₁w₂)^j` for `j >= 0`.
    pub fn rotation(j: usize) -> Self {
        let mut letters = Vec::with_capacity(2 * j);
        for _ in 0..j {
            letters.push(Reflection::W1);
            letters.push(Reflection::W2);
        }
        WeylWord { letters }
    }
}

/// `(γ_n, γ_{n+1})` for `n >= 0`.
fn gamma_pair_nonneg(cd: &CartanData, n: u64) -> (BigInt, BigInt) {
    let t = BigInt::from(cd.trace());
    let mut g0 = BigInt::zero();
    let mut g1 = BigInt::one();
    for _ in 0..n {
        let g2 = &t * &g1 - &g0;
        g0 = std::mem::replace(&mut g1, g2);
    }
    (g0, g1)
}

/// `(γ_j, γ_{j+1})` for any `j`.
pub fn gamma_pair(cd: &CartanData, j: i64) -> (BigInt, BigInt) {
    if j >= 0 {
        gamma_pair_nonneg(cd, j as u64)
    } else {
        // γ_{-n} = -γ_n, so (γ_j, γ_{j+1}) = (-γ_n, -γ_{n-1}) with n = -j.
        let (gm1, g) = gamma_pair_nonneg(cd, (-(j + 1)) as u64);
        (-g, -gm1)
    }
}

/// `γ_j`: `γ₀ = 0`, `γ₁ = 1`, `γ_j = (ab-2)γ_{j-1} - γ_{j-2}`.
pub fn gamma(cd: &CartanData, j: i64) -> BigInt {
    gamma_pair(cd, j).0
}

/// `η_j`: `η₀ = 1`, `η₁ = ab-1`, same recurrence as γ.
pub fn eta(cd: &CartanData, j: i64) -> BigInt {
    // η_j = γ_j + γ_{j+1} for all j: both sides satisfy the recurrence and agree at j = 0, 1.
    let (g, g1) = gamma_pair(cd, j);
    g + g1
}

/// γ_0..=γ_n.
pub fn gamma_table(cd: &CartanData, n: usize) -> Vec<BigInt> {
    let t = BigInt::from(cd.trace());
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    out.push(BigInt::zero());
    if n >= 1 {
        out.push(BigInt::one());
    }
    for k in 2..=n {
        let next = &t * &out[k - 1] - &out[k - 2];
        out.push(next);
    }
    out
}

/// Lattice coordinates of a real root.
pub fn coords(cd: &CartanData, r: RealRoot) -> RootVector {
    let a = BigInt::from(cd.a());
    let b = BigInt::from(cd.b());
    let (g, g1) = gamma_pair(cd, r.j);
    let e = &g + &g1;
    match r.family {
        Family::LL => RootVector::new(e, a * g),
        Family::LU => RootVector::new(e, a * g1),
        Family::SU => RootVector::new(b * g, e),
        Family::SL => RootVector::new(b * g1, e),
    }
}

/// `Q(x,y) = a x² - ab xy + b y²`, i.e. `(b/2)·|v|²`.
pub fn q_form<T: LatticeInt>(cd: &CartanData, v: &RootVector<T>) -> T {
    let a = T::from_i64(cd.a()).expect("a fits");
    let b = T::from_i64(cd.b()).expect("b fits");
    let x = v.x.clone();
    let y = v.y.clone();
    a.clone() * x.clone() * x.clone() - a * b.clone() * x * y.clone() + b * y.clone() * y
}

/// [`q_form`] returning `None` on overflow of `T`.
pub fn checked_q_form<T: LatticeInt>(cd: &CartanData, v: &RootVector<T>) -> Option<T> {
    let a = T::from_i64(cd.a())?;
    let b = T::from_i64(cd.b())?;
    let xx = v.x.checked_mul(&v.x)?;
    let xy = v.x.checked_mul(&v.y)?;
    let yy = v.y.checked_mul(&v.y)?;
    let t1 = a.checked_mul(&xx)?;
    let t2 = a.checked_mul(&b)?.checked_mul(&xy)?;
    let t3 = b.checked_mul(&yy)?;
    t1.checked_sub(&t2)?.checked_add(&t3)
}

/// `b·(u, v)`: the bilinear form of [`q_form`], so `bilinear(v, v) = 2Q(v)`.
pub fn scaled_inner<T: LatticeInt>(cd: &CartanData, u: &RootVector<T>, v: &RootVector<T>) -> T {
    let s = cd.scaled_form();
    let c = |k: i64| T::from_i64(k).expect("form entry fits");
    c(s[0][0]) * u.x.clone() * v.x.clone()
        + c(s[0][1]) * (u.x.clone() * v.y.clone() + u.y.clone() * v.x.clone())
        + c(s[1][1]) * u.y.clone() * v.y.clone()
}

/// The smallest `j >= 0` with `η_j >= t`, together with `(η_j, γ_j, γ_{j+1})`.
/// Returns `None` for `t < 1`.
fn eta_search(cd: &CartanData, t: &BigInt) -> Option<(i64, BigInt, BigInt, BigInt)> {
    if t < &BigInt::one() {
        return None;
    }
    if cd.is_affine() {
        // γ_j = j and η_j = 2j + 1.
        let j = (t - 1i32).div_ceil(&BigInt::from(2));
        let jj = j.to_i64()?;
        let e = BigInt::from(2) * &j + 1i32;
        return Some((jj, e, j.clone(), j + 1i32));
    }
    // Hyperbolic: η grows geometrically, so a scan from j = 0 takes O(log t) steps.
    let tr = BigInt::from(cd.trace());
    let mut j = 0i64;
    let mut g0 = BigInt::zero();
    let mut g1 = BigInt::one();
    loop {
        let e = &g0 + &g1;
        if &e >= t {
            return Some((j, e, g0, g1));
        }
        let g2 = &tr * &g1 - &g0;
        g0 = std::mem::replace(&mut g1, g2);
        j += 1;
    }
}

/// Matches a vector with nonnegative coordinates against the positive roots of one orbit.
fn match_positive(cd: &CartanData, v: &RootVector, alpha1_orbit: bool) -> Option<RealRoot> {
    let a = BigInt::from(cd.a());
    let b = BigInt::from(cd.b());
    if alpha1_orbit {
        let (j, e, g, g1) = eta_search(cd, &v.x)?;
        if e != v.x {
            return None;
        }
        if v.y == &a * g {
            Some(RealRoot::new(Family::LL, j))
        } else if v.y == a * g1 {
            Some(RealRoot::new(Family::LU, j))
        } else {
            None
        }
    } else {
        let (j, e, g, g1) = eta_search(cd, &v.y)?;
        if e != v.y {
            return None;
        }
        if v.x == &b * g {
            Some(RealRoot::new(Family::SU, j))
        } else if v.x == b * g1 {
            Some(RealRoot::new(Family::SL, j))
        } else {
            None
        }
    }
}

fn classify_big(cd: &CartanData, v: &RootVector, q: &BigInt) -> RootClass {
    if v.is_zero() {
        return RootClass::Zero;
    }
    if !q.is_positive() {
        return RootClass::Imaginary;
    }
    let qa = *q == BigInt::from(cd.a());
    let qb = *q == BigInt::from(cd.b());
    if !qa && !qb {
        return RootClass::NotARoot;
    }
    let (pos, flipped) = if !v.x.is_negative() && !v.y.is_negative() {
        (v.clone(), false)
    } else if !v.x.is_positive() && !v.y.is_positive() {
        (-v.clone(), true)
    } else {
        // Roots are either positive or negative.
        return RootClass::NotARoot;
    };
    let hit = (if qa { match_positive(cd, &pos, true) } else { None })
        .or_else(|| if qb { match_positive(cd, &pos, false) } else { None });
    match hit {
        Some(r) if flipped => RootClass::Real(negate(r)),
        Some(r) => RootClass::Real(r),
        None => RootClass::NotARoot,
    }
}

/// Decides whether `v` is zero, a real root (and which one), imaginary, or not a root.
///
/// `Q` filters first; only vectors with `Q ∈ {a, b}` are inverted against the
/// sequences, in big-integer arithmetic.
pub fn classify<T: LatticeInt>(cd: &CartanData, v: &RootVector<T>) -> RootClass {
    if v.is_zero() {
        return RootClass::Zero;
    }
    match checked_q_form(cd, v) {
        Some(q) => {
            if !q.is_positive() {
                return RootClass::Imaginary;
            }
            let a = T::from_i64(cd.a()).expect("a fits");
            let b = T::from_i64(cd.b()).expect("b fits");
            if q != a && q != b {
                return RootClass::NotARoot;
            }
            let big = v.to_big();
            let qb = q.to_bigint().expect("integer converts to BigInt");
            classify_big(cd, &big, &qb)
        }
        None => {
            let big = v.to_big();
            let q = q_form(cd, &big);
            classify_big(cd, &big, &q)
        }
    }
}

/// `-α`: `LL j ↔ LU -j-1`, `SU j ↔ SL -j-1`.
pub fn negate(r: RealRoot) -> RealRoot {
    let family = match r.family {
        Family::LL => Family::LU,
        Family::LU => Family::LL,
        Family::SU => Family::SL,
        Family::SL => Family::SU,
    };
    RealRoot::new(family, -r.j - 1)
}

fn apply_reflection<T: LatticeInt>(cd: &CartanData, s: Reflection, v: RootVector<T>) -> RootVector<T> {
    match s {
        // w₁α₁ = -α₁, w₁α₂ = α₂ + bα₁
        Reflection::W1 => {
            let b = T::from_i64(cd.b()).expect("b fits");
            RootVector::new(b * v.y.clone() - v.x, v.y)
        }
        // w₂α₁ = α₁ + aα₂, w₂α₂ = -α₂
        Reflection::W2 => {
            let a = T::from_i64(cd.a()).expect("a fits");
            RootVector::new(v.x.clone(), a * v.x - v.y)
        }
    }
}

/// Applies the word to `v`; the rightmost letter acts first.
pub fn weyl_act<T: LatticeInt>(cd: &CartanData, w: &WeylWord, v: &RootVector<T>) -> RootVector<T> {
    w.letters.iter().rev().fold(v.clone(), |acc, &s| apply_reflection(cd, s, acc))
}

/// `w_mirror(r)` by index arithmetic. The formulas do not depend on `(a, b)`.
pub fn reflect_in(mirror: RealRoot, r: RealRoot) -> RealRoot {
    let (k, _) = mirror.orbit_index();
    let (j, upper) = r.orbit_index();
    let same_orbit = mirror.family.in_alpha1_orbit() == r.family.in_alpha1_orbit();
    // w^X_k X_j = -X_{2k-j};  w^X_k Y_j = -Y_{-2k-j-1} across orbits.
    let image = if same_orbit { 2 * k - j } else { -2 * k - j - 1 };
    RealRoot::from_orbit_index(r.family.in_alpha1_orbit(), image, !upper)
}

/// Vector form of the reflection: `w_α β = β - ⟨β, α^∨⟩ α`.
pub fn reflect_vector(cd: &CartanData, alpha: RealRoot, beta: &RootVector) -> RootVector {
    let c = pairing(cd, beta, alpha);
    let av = coords(cd, alpha);
    beta - &av.scale(&c)
}

/// `⟨β, α^∨⟩ = 2(β, α)/(α, α)`.
pub fn pairing(cd: &CartanData, beta: &RootVector, alpha: RealRoot) -> BigInt {
    let av = coords(cd, alpha);
    pairing_vec(cd, beta, &av)
}

/// Pairing against an arbitrary lattice vector of positive norm.
pub fn pairing_vec(cd: &CartanData, beta: &RootVector, alpha: &RootVector) -> BigInt {
    let num = scaled_inner(cd, beta, alpha);
    let den = q_form(cd, alpha);
    assert!(den.is_positive(), "pairing against a vector of nonpositive norm {alpha}");
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "non-integral pairing {num}/{den}: {beta} against {alpha} in {cd}");
    q
}

/// `(c₁, c₂)` with `α^∨ = c₁α₁^∨ + c₂α₂^∨`.
pub fn coroot_coords(cd: &CartanData, r: RealRoot) -> (BigInt, BigInt) {
    let v = coords(cd, r);
    // α^∨ = (2/|α|²)(x·|α₁|²/2·α₁^∨ + y·|α₂|²/2·α₂^∨), with |α|² fixed by the orbit.
    let exact = |n: BigInt, d: i64| {
        let (q, rem) = n.div_rem(&BigInt::from(d));
        assert!(rem.is_zero(), "non-integral coroot for {r} in {cd}");
        q
    };
    if r.family.in_alpha1_orbit() {
        (v.x, exact(v.y * cd.b(), cd.a()))
    } else {
        (exact(v.x * cd.a(), cd.b()), v.y)
    }
}

/// True when `r` has maximal norm. For `a = b` every root counts as long.
pub fn is_long(cd: &CartanData, r: RealRoot) -> bool {
    match cd.a().cmp(&cd.b()) {
        std::cmp::Ordering::Equal => true,
        std::cmp::Ordering::Greater => r.family.in_alpha1_orbit(),
        std::cmp::Ordering::Less => !r.family.in_alpha1_orbit(),
    }
}

/// `|v|² = 2Q(v)/b`, normalized so that `|α₂|² = 2`.
pub fn norm_squared(cd: &CartanData, v: &RootVector) -> num_rational::BigRational {
    num_rational::BigRational::new(BigInt::from(2) * q_form(cd, v), BigInt::from(cd.b()))
}

/// Index of a root inside the b = 1 orders; see [`root_order_key`].
fn order_key_b1(a: i64, r: RealRoot) -> u64 {
    let j = r.j as u64;
    if a > 4 {
        match (r.family, j) {
            (Family::SU, 0) => 0,
            (Family::LL, 0) => 1,
            (Family::SL, 0) => 2,
            (Family::SU, _) => 4 * j,
            (Family::SL, _) => 4 * j + 1,
            (Family::LU, _) => 4 * (j + 1) + 2,
            (Family::LL, _) => 4 * j + 3,
        }
    } else {
        // H(4,1): SU0 < SU1 < LL0 < SL0 < SL1 < LU0 < SU2 < LL1 < SL2 < SU3 < SL3 < LU1 < ...
        match (r.family, j) {
            (Family::SU, 0) => 0,
            (Family::SU, 1) => 1,
            (Family::SU, _) => 6 * j,
            (Family::SL, _) if j % 2 == 0 => 6 * j + 4,
            (Family::SL, _) => 6 * j + 2,
            (Family::LL, _) => 12 * j + 2,
            (Family::LU, _) => 12 * j + 10,
        }
    }
}

/// Total order on positive real roots respecting addition, for `H(a,1)` and
/// `H(1,a)` with `a >= 4`.
pub fn root_order_key(cd: &CartanData, r: RealRoot) -> Result<u64> {
    if !r.is_positive() {
        return Err(Error::NegativeRoot(r));
    }
    if cd.b() == 1 {
        Ok(order_key_b1(cd.a(), r))
    } else if cd.a() == 1 {
        Ok(order_key_b1(cd.b(), r.mirror()))
    } else {
        Err(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "root order is defined only when a = 1 or b = 1" })
    }
}

/// All real roots with `|j| <= max_index`, family-major.
pub fn real_roots(max_index: i64) -> impl Iterator<Item = RealRoot> {
    Family::ALL
        .into_iter()
        .flat_map(move |f| (-max_index..=max_index).map(move |j| RealRoot::new(f, j)))
}

/// Positive real roots with `0 <= j <= max_index`.
pub fn positive_real_roots(max_index: i64) -> impl Iterator<Item = RealRoot> {
    Family::ALL.into_iter().flat_map(move |f| (0..=max_index).map(move |j| RealRoot::new(f, j)))
}

/// `i64` coordinates of a root, or `None` if they overflow.
pub fn coords_i64(cd: &CartanData, r: RealRoot) -> Option<RootVector<i64>> {
    let v = coords(cd, r);
    let (x, y) = v.to_i64()?;
    Some(RootVector::new(x, y))
}

/// Convenience conversion for small literal vectors.
pub fn vec_i64(x: i64, y: i64) -> RootVector {
    RootVector::new(BigInt::from_i64(x).unwrap(), BigInt::from_i64(y).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(a: i64, b: i64) -> CartanData {
        CartanData::new(a, b).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn sequence_values() {
        let c = cd(5, 1);
        assert_eq!(gamma(&c, 2), big(3));
        assert_eq!(gamma(&c, 0), big(0));
        assert_eq!(gamma(&c, -2), big(-3));
        assert_eq!(eta(&c, 2), big(11));
        assert_eq!(eta(&c, 0), big(1));
        assert_eq!(eta(&c, -1), big(-1));
        assert_eq!(gamma_table(&c, 4), vec![big(0), big(1), big(3), big(8), big(21)]);
    }

    #[test]
    fn coordinate_values() {
        assert_eq!(coords(&cd(4, 1), RealRoot::new(Family::LL, 1)), vec_i64(3, 4));
        assert_eq!(coords(&cd(5, 1), RealRoot::new(Family::SL, 0)), vec_i64(1, 1));
        assert_eq!(coords(&cd(5, 1), RealRoot::new(Family::LL, 0)), vec_i64(1, 0));
        assert_eq!(coords(&cd(5, 1), RealRoot::new(Family::LL, 1)), vec_i64(4, 5));
    }

    #[test]
    fn quadratic_form_values() {
        let c = cd(5, 1);
        assert_eq!(q_form(&c, &vec_i64(1, 1)), big(1));
        assert_eq!(q_form(&c, &vec_i64(1, 0)), big(5));
        assert_eq!(q_form(&c, &vec_i64(1, 2)), big(-1));
        assert_eq!(q_form(&c, &vec_i64(2, 1)), big(11));
    }

    #[test]
    fn classify_examples() {
        let c = cd(5, 1);
        assert_eq!(classify(&c, &vec_i64(1, 1)), RootClass::Real(RealRoot::new(Family::SL, 0)));
        assert_eq!(classify(&c, &vec_i64(1, 2)), RootClass::Imaginary);
        assert_eq!(classify(&c, &vec_i64(2, 1)), RootClass::NotARoot);
        assert_eq!(classify(&c, &vec_i64(0, 0)), RootClass::Zero);
        assert_eq!(classify(&cd(4, 1), &vec_i64(1, 2)), RootClass::Imaginary);
        assert_eq!(classify(&c, &RootVector::<i64>::new(-4, -5)), RootClass::Real(RealRoot::new(Family::LU, -2)));
    }

    #[test]
    fn classify_i64_overflow_falls_back() {
        let c = cd(7, 3);
        let r = RealRoot::new(Family::SU, 9);
        let v = coords(&c, r);
        assert!(v.to_i64().is_some());
        let small = coords_i64(&c, r).unwrap();
        assert!(checked_q_form(&c, &small).is_none());
        assert_eq!(classify(&c, &small), RootClass::Real(r));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(negate(RealRoot::new(Family::LL, 0)), RealRoot::new(Family::LU, -1));
        assert_eq!(negate(RealRoot::new(Family::SU, 3)), RealRoot::new(Family::SL, -4));
    }

    #[test]
    fn weyl_examples() {
        let c = cd(5, 1);
        let w1 = WeylWord::new(vec![Reflection::W1]);
        let w2 = WeylWord::new(vec![Reflection::W2]);
        assert_eq!(weyl_act(&c, &w1, &vec_i64(1, 0)), vec_i64(-1, 0));
        assert_eq!(weyl_act(&c, &w2, &vec_i64(1, 0)), vec_i64(1, 5));
        assert_eq!(weyl_act(&c, &WeylWord::rotation(1), &vec_i64(1, 0)), vec_i64(4, 5));
    }

    #[test]
    fn reflect_examples() {
        use Family::*;
        assert_eq!(reflect_in(RealRoot::new(LL, 1), RealRoot::new(LL, 0)), RealRoot::new(LU, -3));
        assert_eq!(reflect_in(RealRoot::new(SU, 0), RealRoot::new(SU, 0)), RealRoot::new(SL, -1));
        assert_eq!(reflect_in(RealRoot::new(LL, 0), RealRoot::new(SU, 1)), RealRoot::new(SL, 1));
    }

    #[test]
    fn pairing_examples() {
        let c = cd(5, 1);
        let a2 = RealRoot::new(Family::SU, 0);
        assert_eq!(pairing(&c, &vec_i64(1, 0), a2), big(-5));
        assert_eq!(pairing(&c, &vec_i64(0, 1), a2), big(2));
        assert_eq!(pairing(&c, &vec_i64(1, 1), a2), big(-3));
    }

    #[test]
    fn coroot_examples() {
        assert_eq!(coroot_coords(&cd(5, 1), RealRoot::new(Family::LL, 0)), (big(1), big(0)));
        assert_eq!(coroot_coords(&cd(5, 1), RealRoot::new(Family::SU, 1)), (big(5), big(4)));
        assert_eq!(coroot_coords(&cd(4, 1), RealRoot::new(Family::LU, 0)), (big(1), big(1)));
    }

    #[test]
    fn order_key_examples() {
        use Family::*;
        let c = cd(5, 1);
        let k = |f, j| root_order_key(&c, RealRoot::new(f, j)).unwrap();
        assert!(k(SU, 0) < k(LL, 0) && k(LL, 0) < k(SL, 0));
        let c4 = cd(4, 1);
        let k4 = |f, j| root_order_key(&c4, RealRoot::new(f, j)).unwrap();
        assert!(k4(SU, 1) < k4(LL, 0));
        assert!(k4(SU, 5) < k4(SL, 5) && k4(SL, 5) < k4(LU, 2));
        assert!(root_order_key(&c, RealRoot::new(SU, -1)).is_err());
        assert!(root_order_key(&cd(3, 2), RealRoot::new(SU, 1)).is_err());
    }

    #[test]
    fn parse_and_display_roots() {
        let r: RealRoot = "SU:-3".parse().unwrap();
        assert_eq!(r, RealRoot::new(Family::SU, -3));
        assert_eq!(r.to_string(), "SU:-3");
        assert!("XX:1".parse::<RealRoot>().is_err());
        assert!("SU".parse::<RealRoot>().is_err());
    }
}
