//! Brute-force model of the twisted affine algebra of type `H(4,1)` inside the
//! centrally extended loop algebra `sl₃[t, t⁻¹] ⊕ ℂc`.
//!
//! Elements are finite sums `t^m ⊗ X` over the basis `E₁, E₂, E_θ, F₁, F₂, F_θ,
//! H₁, H₂` with coefficients in `ℚ(√2)`, plus a multiple of `c`. The bracket is
//! `[t^m⊗X, t^n⊗Y] = t^{m+n}⊗[X,Y] + m·δ_{m+n,0}·tr(XY)·c`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Num, Zero};

use crate::cartan::CartanData;
use crate::report::{CheckResult, Report};
use crate::lattice::RootVector;
use crate::roots::{classify, coords, coroot_coords, negate, real_roots, Family, RealRoot, RootClass};

/// `p + q√2` over a field `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtTwoScalar<F> {
    pub p: F,
    pub q: F,
}

impl<F: Clone + Num + Neg<Output = F>> SqrtTwoScalar<F> {
    pub fn new(p: F, q: F) -> Self {
        SqrtTwoScalar { p, q }
    }

    pub fn rational(p: F) -> Self {
        SqrtTwoScalar { p, q: F::zero() }
    }

    pub fn sqrt2() -> Self {
        SqrtTwoScalar { p: F::zero(), q: F::one() }
    }

    pub fn zero() -> Self {
        SqrtTwoScalar { p: F::zero(), q: F::zero() }
    }

    pub fn one() -> Self {
        SqrtTwoScalar::rational(F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `None` for zero. `1/(p + q√2) = (p - q√2)/(p² - 2q²)`; the norm vanishes only at zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let two = F::one() + F::one();
        let norm = self.p.clone() * self.p.clone() - two * self.q.clone() * self.q.clone();
        Some(SqrtTwoScalar { p: self.p.clone() / norm.clone(), q: -self.q.clone() / norm })
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(self.clone() * other.inverse()?)
    }
}

impl<F: Clone + Num> Add for SqrtTwoScalar<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        SqrtTwoScalar { p: self.p + o.p, q: self.q + o.q }
    }
}

impl<F: Clone + Num> Sub for SqrtTwoScalar<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        SqrtTwoScalar { p: self.p - o.p, q: self.q - o.q }
    }
}

impl<F: Clone + Num> Mul for SqrtTwoScalar<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two = F::one() + F::one();
        SqrtTwoScalar {
            p: self.p.clone() * o.p.clone() + two * self.q.clone() * o.q.clone(),
            q: self.p * o.q + self.q * o.p,
        }
    }
}

impl<F: Clone + Num + Neg<Output = F>> Neg for SqrtTwoScalar<F> {
    type Output = Self;
    fn neg(self) -> Self {
        SqrtTwoScalar { p: -self.p, q: -self.q }
    }
}

impl<F: fmt::Display + Zero> fmt::Display for SqrtTwoScalar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "{}√2", self.q),
            (false, false) => write!(f, "{} + {}√2", self.p, self.q),
        }
    }
}

/// Exact scalars used by the oracle.
pub type SqrtTwo = SqrtTwoScalar<BigRational>;

fn int(n: i64) -> SqrtTwo {
    SqrtTwo::rational(BigRational::from_integer(BigInt::from(n)))
}

impl SqrtTwo {
    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.q.is_zero() && self.p.is_integer()).then(|| self.p.to_integer())
    }
}

/// Basis of `sl₃`: `E₁=E₁₂`, `E₂=E₂₃`, `E_θ=-E₁₃`, `F₁=E₂₁`, `F₂=E₃₂`, `F_θ=-E₃₁`,
/// `H₁=E₁₁-E₂₂`, `H₂=E₂₂-E₃₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl3 {
    E1,
    E2,
    ETheta,
    F1,
    F2,
    FTheta,
    H1,
    H2,
}

impl Sl3 {
    pub const ALL: [Sl3; 8] = [Sl3::E1, Sl3::E2, Sl3::ETheta, Sl3::F1, Sl3::F2, Sl3::FTheta, Sl3::H1, Sl3::H2];

    fn index(self) -> usize {
        self as usize
    }

    fn matrix(self) -> [[i64; 3]; 3] {
        let mut m = [[0i64; 3]; 3];
        match self {
            Sl3::E1 => m[0][1] = 1,
            Sl3::E2 => m[1][2] = 1,
            Sl3::ETheta => m[0][2] = -1,
            Sl3::F1 => m[1][0] = 1,
            Sl3::F2 => m[2][1] = 1,
            Sl3::FTheta => m[2][0] = -1,
            Sl3::H1 => {
                m[0][0] = 1;
                m[1][1] = -1;
            }
            Sl3::H2 => {
                m[1][1] = 1;
                m[2][2] = -1;
            }
        }
        m
    }

    /// Degree in the grading by `α₂`-height relative to `t`: weight of `t^m⊗X` is `(m, 2m + deg X)`.
    pub fn degree(self) -> i64 {
        match self {
            Sl3::E1 | Sl3::E2 => 1,
            Sl3::ETheta => 2,
            Sl3::F1 | Sl3::F2 => -1,
            Sl3::FTheta => -2,
            Sl3::H1 | Sl3::H2 => 0,
        }
    }

    /// Image under `X ↦ -Xᵀ`.
    pub fn minus_transpose(self) -> (i64, Sl3) {
        match self {
            Sl3::E1 => (-1, Sl3::F1),
            Sl3::E2 => (-1, Sl3::F2),
            Sl3::ETheta => (-1, Sl3::FTheta),
            Sl3::F1 => (-1, Sl3::E1),
            Sl3::F2 => (-1, Sl3::E2),
            Sl3::FTheta => (-1, Sl3::ETheta),
            Sl3::H1 => (-1, Sl3::H1),
            Sl3::H2 => (-1, Sl3::H2),
        }
    }
}

fn mat_mul(x: &[[i64; 3]; 3], y: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let mut out = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

/// Coordinates of a traceless matrix in the [`Sl3`] basis.
fn decompose(m: &[[i64; 3]; 3]) -> [i64; 8] {
    assert_eq!(m[0][0] + m[1][1] + m[2][2], 0, "matrix is not traceless");
    let mut c = [0i64; 8];
    c[Sl3::E1.index()] = m[0][1];
    c[Sl3::E2.index()] = m[1][2];
    c[Sl3::ETheta.index()] = -m[0][2];
    c[Sl3::F1.index()] = m[1][0];
    c[Sl3::F2.index()] = m[2][1];
    c[Sl3::FTheta.index()] = -m[2][0];
    // h₁H₁ + h₂H₂ = diag(h₁, h₂ - h₁, -h₂)
    c[Sl3::H1.index()] = m[0][0];
    c[Sl3::H2.index()] = -m[2][2];
    c
}

/// `[X, Y]₀` in the basis.
pub fn sl3_bracket(x: Sl3, y: Sl3) -> [i64; 8] {
    let (mx, my) = (x.matrix(), y.matrix());
    let xy = mat_mul(&mx, &my);
    let yx = mat_mul(&my, &mx);
    let mut d = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            d[i][j] = xy[i][j] - yx[i][j];
        }
    }
    decompose(&d)
}

/// `(X, Y)₀ = tr(XY)`.
pub fn trace_form(x: Sl3, y: Sl3) -> i64 {
    let m = mat_mul(&x.matrix(), &y.matrix());
    m[0][0] + m[1][1] + m[2][2]
}

struct Tables {
    bracket: [[[i64; 8]; 8]; 8],
    form: [[i64; 8]; 8],
}

fn tables() -> &'static Tables {
    static T: std::sync::OnceLock<Tables> = std::sync::OnceLock::new();
    T.get_or_init(|| {
        let mut bracket = [[[0i64; 8]; 8]; 8];
        let mut form = [[0i64; 8]; 8];
        for x in Sl3::ALL {
            for y in Sl3::ALL {
                bracket[x.index()][y.index()] = sl3_bracket(x, y);
                form[x.index()][y.index()] = trace_form(x, y);
            }
        }
        Tables { bracket, form }
    })
}

/// `Σ coeff·t^m⊗X + central·c`, with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoopElement {
    pub terms: BTreeMap<(i64, Sl3), SqrtTwo>,
    pub central: Option<SqrtTwo>,
}

impl LoopElement {
    pub fn zero() -> Self {
        LoopElement::default()
    }

    pub fn term(power: i64, x: Sl3, coeff: SqrtTwo) -> Self {
        let mut e = LoopElement::zero();
        e.add_term(power, x, coeff);
        e
    }

    pub fn central(coeff: SqrtTwo) -> Self {
        let mut e = LoopElement::zero();
        e.add_central(coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_none()
    }

    pub fn add_term(&mut self, power: i64, x: Sl3, coeff: SqrtTwo) {
        if coeff.is_zero() {
            return;
        }
        let key = (power, x);
        let sum = match self.terms.remove(&key) {
            Some(c) => c + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_central(&mut self, coeff: SqrtTwo) {
        let sum = match self.central.take() {
            Some(c) => c + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.central = Some(sum);
        }
    }

    pub fn central_coeff(&self) -> SqrtTwo {
        self.central.clone().unwrap_or_else(SqrtTwo::zero)
    }

    pub fn coeff(&self, power: i64, x: Sl3) -> SqrtTwo {
        self.terms.get(&(power, x)).cloned().unwrap_or_else(SqrtTwo::zero)
    }

    pub fn scale(&self, k: &SqrtTwo) -> LoopElement {
        let mut out = LoopElement::zero();
        for (&(m, x), c) in &self.terms {
            out.add_term(m, x, c.clone() * k.clone());
        }
        if let Some(c) = &self.central {
            out.add_central(c.clone() * k.clone());
        }
        out
    }

    /// Weights `(m, 2m + deg X)` of the loop terms; the central term has weight `(0, 0)`.
    pub fn weights(&self) -> BTreeSet<(i64, i64)> {
        let mut w: BTreeSet<_> = self.terms.keys().map(|&(m, x)| (m, 2 * m + x.degree())).collect();
        if self.central.is_some() {
            w.insert((0, 0));
        }
        w
    }

    /// The involution `t^m⊗X ↦ t^{-m}⊗(-Xᵀ)`, `c ↦ -c`.
    pub fn chevalley_involution(&self) -> LoopElement {
        let mut out = LoopElement::zero();
        for (&(m, x), c) in &self.terms {
            let (s, y) = x.minus_transpose();
            out.add_term(-m, y, c.clone() * int(s));
        }
        if let Some(c) = &self.central {
            out.add_central(-c.clone());
        }
        out
    }
}

impl Add for &LoopElement {
    type Output = LoopElement;
    fn add(self, o: &LoopElement) -> LoopElement {
        let mut out = self.clone();
        for (&(m, x), c) in &o.terms {
            out.add_term(m, x, c.clone());
        }
        if let Some(c) = &o.central {
            out.add_central(c.clone());
        }
        out
    }
}

impl Neg for &LoopElement {
    type Output = LoopElement;
    fn neg(self) -> LoopElement {
        self.scale(&int(-1))
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(m, x), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) t^{m}⊗{x:?}")?;
        }
        if let Some(c) = &self.central {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) c")?;
        }
        Ok(())
    }
}

/// The centrally extended loop bracket.
pub fn bracket(u: &LoopElement, v: &LoopElement) -> LoopElement {
    let t = tables();
    let mut out = LoopElement::zero();
    for (&(m, x), cu) in &u.terms {
        for (&(n, y), cv) in &v.terms {
            let coeff = cu.clone() * cv.clone();
            let row = &t.bracket[x.index()][y.index()];
            for z in Sl3::ALL {
                let k = row[z.index()];
                if k != 0 {
                    out.add_term(m + n, z, coeff.clone() * int(k));
                }
            }
            if m + n == 0 {
                let k = m * t.form[x.index()][y.index()];
                if k != 0 {
                    out.add_central(coeff * int(k));
                }
            }
        }
    }
    out
}

/// `α₁^∨ = -1⊗(H₁+H₂) + c` and `α₂^∨ = 2⊗(H₁+H₂)` (α₁ = (1,0) the long simple root).
pub fn simple_coroot(i: usize) -> LoopElement {
    let mut e = LoopElement::zero();
    match i {
        1 => {
            e.add_term(0, Sl3::H1, int(-1));
            e.add_term(0, Sl3::H2, int(-1));
            e.add_central(int(1));
        }
        2 => {
            e.add_term(0, Sl3::H1, int(2));
            e.add_term(0, Sl3::H2, int(2));
        }
        _ => panic!("simple coroot index must be 1 or 2"),
    }
    e
}

/// `c₁α₁^∨ + c₂α₂^∨`.
pub fn coroot_element(c1: &BigInt, c2: &BigInt) -> LoopElement {
    let k = |n: &BigInt| SqrtTwo::rational(BigRational::from_integer(n.clone()));
    &simple_coroot(1).scale(&k(c1)) + &simple_coroot(2).scale(&k(c2))
}

/// Root vector of the unrescaled basis.
fn standard_root_vector(r: RealRoot) -> LoopElement {
    let j = r.j;
    let parity = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
    match r.family {
        Family::SU => {
            let mut e = LoopElement::term(j, Sl3::E1, SqrtTwo::sqrt2());
            e.add_term(j, Sl3::E2, SqrtTwo::sqrt2() * int(parity(j)));
            e
        }
        Family::SL => {
            let mut e = LoopElement::term(j + 1, Sl3::F1, SqrtTwo::sqrt2());
            e.add_term(j + 1, Sl3::F2, SqrtTwo::sqrt2() * int(parity(j + 1)));
            e
        }
        Family::LU => LoopElement::term(2 * j + 1, Sl3::ETheta, int(1)),
        Family::LL => LoopElement::term(2 * j + 1, Sl3::FTheta, int(1)),
    }
}

/// Bracket of two root vectors decomposed against the known basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Zero,
    RealVector { n: BigInt, root: RealRoot },
    Coroot { c1: BigInt, c2: BigInt },
    ImaginarySpace { vector: RootVector, value: LoopElement },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bracket [{alpha}, {beta}] = {value} does not decompose: {reason}")]
pub struct OracleError {
    pub alpha: RealRoot,
    pub beta: RealRoot,
    pub value: String,
    pub reason: &'static str,
}

/// Root vectors `x̄_α = (-1)^{ρ(α)} x_α`, with `x̄_{-α}` rescaled by the same sign.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct A22Oracle {
    flips: BTreeSet<RealRoot>,
}

impl A22Oracle {
    pub fn standard() -> Self {
        A22Oracle::default()
    }

    /// `rho` maps positive roots to ±1; roots absent from the map keep sign +1.
    pub fn rescaled_basis(rho: &BTreeMap<RealRoot, i8>) -> Self {
        let flips = rho.iter().filter(|(r, &s)| r.is_positive() && s < 0).map(|(&r, _)| r).collect();
        A22Oracle { flips }
    }

    pub fn cartan() -> CartanData {
        CartanData::new(4, 1).expect("H(4,1) is affine")
    }

    /// Sign attached to `α` (shared by `α` and `-α`).
    pub fn sign(&self, r: RealRoot) -> i64 {
        let pos = if r.is_positive() { r } else { negate(r) };
        if self.flips.contains(&pos) {
            -1
        } else {
            1
        }
    }

    pub fn root_vector(&self, r: RealRoot) -> LoopElement {
        let v = standard_root_vector(r);
        if self.sign(r) < 0 {
            -&v
        } else {
            v
        }
    }

    pub fn oracle_n(&self, alpha: RealRoot, beta: RealRoot) -> Result<OracleResult, OracleError> {
        let w = bracket(&self.root_vector(alpha), &self.root_vector(beta));
        self.decompose(alpha, beta, w)
    }

    fn decompose(&self, alpha: RealRoot, beta: RealRoot, w: LoopElement) -> Result<OracleResult, OracleError> {
        let cd = A22Oracle::cartan();
        let sum = coords(&cd, alpha) + coords(&cd, beta);
        let fail = |w: &LoopElement, reason| OracleError { alpha, beta, value: w.to_string(), reason };
        match classify(&cd, &sum) {
            RootClass::NotARoot => {
                if w.is_zero() {
                    Ok(OracleResult::Zero)
                } else {
                    Err(fail(&w, "weight is not a root but the bracket is nonzero"))
                }
            }
            RootClass::Zero => {
                let h1 = w.coeff(0, Sl3::H1);
                let h2 = w.coeff(0, Sl3::H2);
                let c = w.central_coeff();
                let support_ok = w.terms.keys().all(|&(m, x)| m == 0 && matches!(x, Sl3::H1 | Sl3::H2));
                if !support_ok || h1 != h2 {
                    return Err(fail(&w, "not in the span of the simple coroots"));
                }
                // u(H₁+H₂) + w c = c₁(-(H₁+H₂) + c) + c₂·2(H₁+H₂)
                let c1 = c.to_integer().ok_or_else(|| fail(&w, "non-integral coroot coefficient"))?;
                let two_c2 = (h1 + c).to_integer().ok_or_else(|| fail(&w, "non-integral coroot coefficient"))?;
                if two_c2.is_odd() {
                    return Err(fail(&w, "non-integral coroot coefficient"));
                }
                Ok(OracleResult::Coroot { c1, c2: two_c2 / 2 })
            }
            RootClass::Imaginary => Ok(OracleResult::ImaginarySpace { vector: sum, value: w }),
            RootClass::Real(gamma) => {
                let x = self.root_vector(gamma);
                let (&(m, y), xc) = x.terms.iter().next().expect("root vectors are nonzero");
                let n = w.coeff(m, y).checked_div(xc).ok_or_else(|| fail(&w, "zero root vector"))?;
                if x.scale(&n) != w {
                    return Err(fail(&w, "not a multiple of the target root vector"));
                }
                let n = n.to_integer().ok_or_else(|| fail(&w, "non-integral structure constant"))?;
                if n.is_zero() {
                    return Err(fail(&w, "vanishing bracket into a real root space"));
                }
                Ok(OracleResult::RealVector { n, root: gamma })
            }
        }
    }

    /// Jacobi identity, anticommutativity and weight additivity over root vectors
    /// with `|j| <= window`, together with `α₁^∨`, `α₂^∨` and `c`.
    pub fn jacobi_check(&self, window: i64) -> Report {
        let mut elems: Vec<(String, LoopElement)> =
            real_roots(window).map(|r| (r.to_string(), self.root_vector(r))).collect();
        elems.push(("α1^∨".into(), simple_coroot(1)));
        elems.push(("α2^∨".into(), simple_coroot(2)));
        elems.push(("c".into(), LoopElement::central(int(1))));
        let n = elems.len();
        let mut pair: Vec<Vec<LoopElement>> = vec![Vec::with_capacity(n); n];
        let mut anti = CheckResult::new("oracle: anticommutativity");
        let mut weights = CheckResult::new("oracle: weight additivity");
        for i in 0..n {
            for j in 0..n {
                let b = bracket(&elems[i].1, &elems[j].1);
                pair[i].push(b);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let s = &pair[i][j] + &pair[j][i];
                anti.record(s.is_zero(), || format!("[{}, {}]", elems[i].0, elems[j].0));
                let (wu, wv) = (elems[i].1.weights(), elems[j].1.weights());
                if wu.len() == 1 && wv.len() == 1 && !pair[i][j].is_zero() {
                    let (a, b) = (wu.first().unwrap(), wv.first().unwrap());
                    let target = (a.0 + b.0, a.1 + b.1);
                    let ok = pair[i][j].weights().iter().all(|&w| w == target);
                    weights.record(ok, || format!("[{}, {}] off weight {target:?}", elems[i].0, elems[j].0));
                }
            }
        }
        let mut jac = CheckResult::new("oracle: Jacobi identity");
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let t1 = bracket(&pair[i][j], &elems[k].1);
                    let t2 = bracket(&pair[j][k], &elems[i].1);
                    let t3 = bracket(&pair[k][i], &elems[j].1);
                    let s = &(&t1 + &t2) + &t3;
                    jac.record(s.is_zero(), || format!("({}, {}, {})", elems[i].0, elems[j].0, elems[k].0));
                }
            }
        }
        let mut r = Report::new();
        r.push(anti);
        r.push(weights);
        r.push(jac);
        r
    }

    /// `[x_α, x_{-α}] = α^∨` and `ω(x_α) = -x_{-α}` for `|j| <= window`.
    pub fn normalization_check(&self, window: i64) -> Report {
        let cd = A22Oracle::cartan();
        let mut neg = CheckResult::new("oracle: [x_α, x_-α] = α^∨");
        let mut chev = CheckResult::new("oracle: ω(x_α) = -x_-α");
        for r in real_roots(window) {
            let (c1, c2) = coroot_coords(&cd, r);
            let got = bracket(&self.root_vector(r), &self.root_vector(negate(r)));
            neg.record(got == coroot_element(&c1, &c2), || format!("{r}: {got}"));
            let w = self.root_vector(r).chevalley_involution();
            chev.record(w == -&self.root_vector(negate(r)), || format!("{r}: {w}"));
        }
        let mut rep = Report::new();
        rep.push(neg);
        rep.push(chev);
        rep
    }
}
