//! Φ-subsystems `W_Γ·Γ` and Δ-subsystems `ℤΓ ∩ Δ` generated by sets of real roots.
//!
//! A Φ-subsystem is described by the orbit indices it contains: `I^L` for the
//! α₁-orbit (`LL j`, `LU -j-1`) and `I^S` for the α₂-orbit (`SU j`, `SL -j-1`).
//! These are arithmetic progressions, which pins the subsystem to one of five
//! shapes with explicit simple roots.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::lattice::Sublattice;
use crate::report::{CheckResult, Report};
use crate::roots::{coords, eta, gamma, pairing, reflect_in, scaled_inner, Family, RealRoot};

/// One orbit's index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexSet {
    Empty,
    /// `{r}` when `modulus = 0`, otherwise `r + modulus·ℤ` with `0 <= r < modulus`.
    Arith { r: i64, modulus: i64 },
}

impl IndexSet {
    fn progression(r: i64, modulus: i64) -> IndexSet {
        if modulus == 0 {
            IndexSet::Arith { r, modulus: 0 }
        } else {
            IndexSet::Arith { r: r.rem_euclid(modulus), modulus }
        }
    }

    pub fn contains(&self, j: i64) -> bool {
        match *self {
            IndexSet::Empty => false,
            IndexSet::Arith { r, modulus: 0 } => j == r,
            IndexSet::Arith { r, modulus } => (j - r).rem_euclid(modulus) == 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IndexSet::Empty)
    }
}

/// `I^L` (α₁-orbit) and `I^S` (α₂-orbit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSets {
    pub long_set: IndexSet,
    pub short_set: IndexSet,
}

impl IndexSets {
    pub fn contains(&self, r: RealRoot) -> bool {
        let (j, _) = r.orbit_index();
        if r.family.in_alpha1_orbit() {
            self.long_set.contains(j)
        } else {
            self.short_set.contains(j)
        }
    }

    fn swapped(self) -> IndexSets {
        IndexSets { long_set: self.short_set, short_set: self.long_set }
    }
}

/// The five subsystem shapes. `d` is the row parameter, not a modulus: the
/// progressions have step `d` for `II_L`, `II_S` and `2d+1` for `II_LS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    IL { r: i64 },
    IS { r: i64 },
    IIL { r: i64, d: i64 },
    IIS { r: i64, d: i64 },
    IILS { r: i64, d: i64 },
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::IL { .. } => "I_L",
            Shape::IS { .. } => "I_S",
            Shape::IIL { .. } => "II_L",
            Shape::IIS { .. } => "II_S",
            Shape::IILS { .. } => "II_LS",
        }
    }

    pub fn params(&self) -> (i64, Option<i64>) {
        match *self {
            Shape::IL { r } | Shape::IS { r } => (r, None),
            Shape::IIL { r, d } | Shape::IIS { r, d } | Shape::IILS { r, d } => (r, Some(d)),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params() {
            (r, None) => write!(f, "{}({r})", self.name()),
            (r, Some(d)) => write!(f, "{}({r},{d})", self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemDescriptor {
    pub shape: Shape,
    pub simple_roots: Vec<RealRoot>,
    /// `c_ij = ⟨β_j, β_i^∨⟩`.
    pub cartan: Vec<Vec<BigInt>>,
    /// `(β_i, β_j)` with `|α₂|² = 2`.
    pub inner_product: Vec<Vec<BigRational>>,
    pub index_sets: IndexSets,
}

impl SubsystemDescriptor {
    pub fn contains(&self, r: RealRoot) -> bool {
        self.index_sets.contains(r)
    }

    /// `(a', b')` such that the Cartan matrix is `H(a', b')`; `None` in rank 1.
    pub fn cartan_type(&self) -> Option<(BigInt, BigInt)> {
        if self.cartan.len() == 2 {
            Some((-self.cartan[1][0].clone(), -self.cartan[0][1].clone()))
        } else {
            None
        }
    }
}

/// `δ_k = η_k - η_{k-1}` for any `k`.
pub fn delta_any(cd: &CartanData, k: i64) -> BigInt {
    eta(cd, k) - eta(cd, k - 1)
}

/// `ε_k = γ_{k+1} - γ_k` for any `k`.
pub fn eps_any(cd: &CartanData, k: i64) -> BigInt {
    gamma(cd, k + 1) - gamma(cd, k)
}

/// `δ_d = η_d - η_{d-1}`, `d >= 1`.
pub fn delta_d(cd: &CartanData, d: i64) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::InvalidArgument(format!("delta_d needs d >= 1, got {d}")));
    }
    Ok(delta_any(cd, d))
}

/// `ε_d = γ_{d+1} - γ_d`, `d >= 0`.
pub fn eps_d(cd: &CartanData, d: i64) -> Result<BigInt> {
    if d < 0 {
        return Err(Error::InvalidArgument(format!("eps_d needs d >= 0, got {d}")));
    }
    Ok(eps_any(cd, d))
}

fn gcd_of_differences(xs: &[i64]) -> i64 {
    xs.iter().skip(1).fold(0i64, |g, &x| g.gcd(&(x - xs[0])))
}

/// Index sets of `Φ(Γ)`. The result does not depend on `(a, b)`.
pub fn index_sets(generators: &[RealRoot]) -> Result<IndexSets> {
    if generators.is_empty() {
        return Err(Error::InvalidArgument("generator set is empty".into()));
    }
    let mut long: Vec<i64> = Vec::new();
    let mut short: Vec<i64> = Vec::new();
    for g in generators {
        let (j, _) = g.orbit_index();
        if g.family.in_alpha1_orbit() {
            long.push(j);
        } else {
            short.push(j);
        }
    }
    let one_orbit = |xs: &[i64]| {
        if xs.is_empty() {
            IndexSet::Empty
        } else {
            IndexSet::progression(xs[0], gcd_of_differences(xs))
        }
    };
    if long.is_empty() || short.is_empty() {
        return Ok(IndexSets { long_set: one_orbit(&long), short_set: one_orbit(&short) });
    }
    // Cross reflections act on each orbit by j ↦ c - j with c ∈ {2k} ∪ {-2l-1};
    // their differences, including the odd 2k + 2l + 1, generate the common step.
    let m = gcd_of_differences(&long)
        .gcd(&gcd_of_differences(&short))
        .gcd(&(2 * long[0] + 2 * short[0] + 1));
    Ok(IndexSets { long_set: IndexSet::progression(long[0], m), short_set: IndexSet::progression(short[0], m) })
}

/// Shape and simple roots for index sets of a system with `a >= b`.
fn shape_of(sets: &IndexSets) -> (Shape, Vec<RealRoot>) {
    use Family::*;
    let r = RealRoot::new;
    match (sets.long_set, sets.short_set) {
        (IndexSet::Arith { r: l, modulus: 0 }, IndexSet::Empty) => (Shape::IL { r: l }, vec![r(LL, l)]),
        (IndexSet::Empty, IndexSet::Arith { r: s, modulus: 0 }) => (Shape::IS { r: s }, vec![r(SU, s)]),
        (IndexSet::Arith { r: l, modulus: d }, IndexSet::Empty) => {
            (Shape::IIL { r: l, d }, vec![r(LL, l), r(LU, d - l - 1)])
        }
        (IndexSet::Empty, IndexSet::Arith { r: s, modulus: d }) => {
            (Shape::IIS { r: s, d }, vec![r(SU, s), r(SL, d - s - 1)])
        }
        (IndexSet::Arith { r: l, modulus: m }, IndexSet::Arith { .. }) => {
            let d = (m - 1) / 2;
            let rr = if l > d { l - m } else { l };
            (Shape::IILS { r: rr, d }, vec![r(LL, rr), r(SU, d - rr)])
        }
        (IndexSet::Empty, IndexSet::Empty) => unreachable!("nonempty generator set"),
    }
}

/// Index sets of a shape in a system with `a >= b`.
fn sets_of(shape: Shape) -> IndexSets {
    let e = IndexSet::Empty;
    match shape {
        Shape::IL { r } => IndexSets { long_set: IndexSet::progression(r, 0), short_set: e },
        Shape::IS { r } => IndexSets { long_set: e, short_set: IndexSet::progression(r, 0) },
        Shape::IIL { r, d } => IndexSets { long_set: IndexSet::progression(r, d), short_set: e },
        Shape::IIS { r, d } => IndexSets { long_set: e, short_set: IndexSet::progression(r, d) },
        Shape::IILS { r, d } => IndexSets {
            long_set: IndexSet::progression(r, 2 * d + 1),
            short_set: IndexSet::progression(d - r, 2 * d + 1),
        },
    }
}

fn describe(cd: &CartanData, shape: Shape, simple_roots: Vec<RealRoot>, index_sets: IndexSets) -> SubsystemDescriptor {
    let vecs: Vec<_> = simple_roots.iter().map(|&r| coords(cd, r)).collect();
    let n = simple_roots.len();
    let b = BigInt::from(cd.b());
    let mut cartan = vec![vec![BigInt::zero(); n]; n];
    let mut inner = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            cartan[i][j] = pairing(cd, &vecs[j], simple_roots[i]);
            inner[i][j] = BigRational::new(scaled_inner(cd, &vecs[i], &vecs[j]), b.clone());
        }
    }
    SubsystemDescriptor { shape, simple_roots, cartan, inner_product: inner, index_sets }
}

/// Runs `f` in the `a >= b` frame, mirroring generators in and simple roots out.
fn in_canonical_frame<F>(cd: &CartanData, generators: &[RealRoot], f: F) -> Result<SubsystemDescriptor>
where
    F: FnOnce(&CartanData, &[RealRoot]) -> Result<(Shape, Vec<RealRoot>)>,
{
    let flip = cd.a() < cd.b();
    let (ccd, gens): (CartanData, Vec<RealRoot>) = if flip {
        (cd.mirror(), generators.iter().map(RealRoot::mirror).collect())
    } else {
        (*cd, generators.to_vec())
    };
    let (shape, roots) = f(&ccd, &gens)?;
    let sets = sets_of(shape);
    if flip {
        Ok(describe(cd, shape, roots.iter().map(RealRoot::mirror).collect(), sets.swapped()))
    } else {
        Ok(describe(cd, shape, roots, sets))
    }
}

/// The Φ-subsystem `W_Γ·Γ`.
///
/// For `a < b` the shape labels refer to the mirrored system `H(b,a)`, so `L`
/// still means the longer roots.
pub fn phi_subsystem(cd: &CartanData, generators: &[RealRoot]) -> Result<SubsystemDescriptor> {
    in_canonical_frame(cd, generators, |_, gens| Ok(shape_of(&index_sets(gens)?)))
}

/// The real roots of the Δ-subsystem `ℤΓ ∩ Δ`, as a Φ-subsystem.
pub fn delta_re_subsystem(cd: &CartanData, generators: &[RealRoot]) -> Result<SubsystemDescriptor> {
    in_canonical_frame(cd, generators, |ccd, gens| {
        let (shape, roots) = shape_of(&index_sets(gens)?);
        let Shape::IIS { r, d } = shape else { return Ok((shape, roots)) };
        if ccd.b() != 1 {
            return Ok((shape, roots));
        }
        let exceptional = if ccd.a() > 4 {
            // All short roots: the lattice they span is everything.
            (d == 1).then_some((0, 0))
        } else {
            // H(4,1) with odd d = 2e+1: long roots with index e - r (mod d) join in.
            (d % 2 == 1).then(|| {
                let e = (d - 1) / 2;
                let s = (e - r).rem_euclid(d);
                (if s > e { s - d } else { s }, e)
            })
        };
        Ok(match exceptional {
            Some((s, e)) => {
                let r = RealRoot::new;
                (Shape::IILS { r: s, d: e }, vec![r(Family::LL, s), r(Family::SU, e - s)])
            }
            None => (shape, roots),
        })
    })
}

/// Brute-force `W_Γ·Γ` restricted to `|j| <= index_bound`: close under
/// reflections until nothing new appears in the window.
pub fn phi_closure_oracle(generators: &[RealRoot], index_bound: i64) -> BTreeSet<RealRoot> {
    let mut set: BTreeSet<RealRoot> = generators.iter().copied().collect();
    let mut members: Vec<RealRoot> = set.iter().copied().collect();
    let mut frontier = members.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &new in &frontier {
            for &old in &members {
                for img in [reflect_in(new, old), reflect_in(old, new)] {
                    if img.j.abs() <= index_bound && set.insert(img) {
                        next.push(img);
                    }
                }
            }
        }
        members.extend(next.iter().copied());
        frontier = next;
    }
    set
}

/// The lattice `ℤΓ`.
pub fn generated_lattice(cd: &CartanData, generators: &[RealRoot]) -> Sublattice {
    let vecs: Vec<_> = generators.iter().map(|&g| coords(cd, g)).collect();
    Sublattice::generated_by(&vecs)
}

/// Whether `candidate` lies in `ℤΓ`.
pub fn delta_re_membership_oracle(cd: &CartanData, generators: &[RealRoot], candidate: RealRoot) -> bool {
    generated_lattice(cd, generators).contains(&coords(cd, candidate))
}

/// Checks the recurrence identities linking γ, η, δ, ε and the divisibility
/// criteria they imply, over `0 <= d <= d_max`, `|j| <= j_max`.
pub fn divisibility_suite(cd: &CartanData, d_max: i64, j_max: i64) -> Report {
    let g = |k: i64| gamma(cd, k);
    let e = |k: i64| eta(cd, k);
    let dl = |k: i64| delta_any(cd, k);
    let ep = |k: i64| eps_any(cd, k);
    let ab = BigInt::from(cd.ab());
    let divides = |x: &BigInt, y: &BigInt| if x.is_zero() { y.is_zero() } else { y.is_multiple_of(x) };
    let in_class = |j: i64, r: i64, m: i64| if m == 0 { j == r } else { (j - r).rem_euclid(m) == 0 };

    let mut rec = [
        CheckResult::new("divrec: γ_d δ_{j-d} = γ_j - γ_{j-2d}"),
        CheckResult::new("divrec: η_d ε_{j-d-1} = γ_j - γ_{j-2d-1}"),
        CheckResult::new("divrec: η_d δ_{j-d} = η_j - η_{j-2d-1}"),
        CheckResult::new("divrec: ab γ_d ε_{j-d} = η_j - η_{j-2d}"),
    ];
    let mut div = [
        CheckResult::new("div: gcd(a, η_j) = gcd(b, η_j) = 1"),
        CheckResult::new("div: γ_d | γ_j iff j ∈ dℤ"),
        CheckResult::new("div: η_d | γ_j iff j ∈ (2d+1)ℤ"),
        CheckResult::new("div: η_d | η_j iff j ∈ d + (2d+1)ℤ"),
        CheckResult::new("div: γ_d | η_j iff d = 1 (ab > 4)"),
        CheckResult::new("div: γ_d | η_j iff d = 2e+1, j ∈ e + dℤ (ab = 4)"),
    ];
    let (a, b) = (BigInt::from(cd.a()), BigInt::from(cd.b()));
    for j in -j_max..=j_max {
        let ej = e(j);
        div[0].record(ej.gcd(&a).is_one() && ej.gcd(&b).is_one(), || format!("j={j}"));
    }
    for d in 0..=d_max {
        let (gd, ed) = (g(d), e(d));
        for j in -j_max..=j_max {
            let (gj, ej) = (g(j), e(j));
            rec[0].record(&gd * dl(j - d) == &gj - g(j - 2 * d), || format!("d={d} j={j}"));
            rec[1].record(&ed * ep(j - d - 1) == &gj - g(j - 2 * d - 1), || format!("d={d} j={j}"));
            rec[2].record(&ed * dl(j - d) == &ej - e(j - 2 * d - 1), || format!("d={d} j={j}"));
            rec[3].record(&ab * &gd * ep(j - d) == &ej - e(j - 2 * d), || format!("d={d} j={j}"));

            div[1].record(divides(&gd, &gj) == in_class(j, 0, d), || format!("d={d} j={j}"));
            div[2].record(divides(&ed, &gj) == in_class(j, 0, 2 * d + 1), || format!("d={d} j={j}"));
            div[3].record(divides(&ed, &ej) == in_class(j, d, 2 * d + 1), || format!("d={d} j={j}"));
            if cd.is_affine() {
                let expect = d % 2 == 1 && in_class(j, (d - 1) / 2, d);
                div[5].record(divides(&gd, &ej) == expect, || format!("d={d} j={j}"));
            } else {
                div[4].record(divides(&gd, &ej) == (d == 1), || format!("d={d} j={j}"));
            }
        }
    }
    let mut report = Report::new();
    for c in rec.into_iter().chain(div) {
        report.push(c);
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Symmetric,
    NonSymmetric,
}

/// Subsystems of types `H(δ_d, δ_d)` (symmetric) or `H(aε_d, bε_d)` for `d = 1..=count`.
pub fn infinite_family(cd: &CartanData, kind: FamilyKind, count: i64) -> Result<Vec<SubsystemDescriptor>> {
    if cd.is_affine() {
        return Err(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "infinite families need a hyperbolic system" });
    }
    if kind == FamilyKind::NonSymmetric && cd.a() == cd.b() {
        return Err(Error::Unsupported { a: cd.a(), b: cd.b(), reason: "non-symmetric families need a != b" });
    }
    use Family::*;
    let flip = cd.a() < cd.b();
    let fam = |f: Family| if flip { f.mirror() } else { f };
    (1..=count)
        .map(|d| {
            let gens = match kind {
                FamilyKind::Symmetric => vec![RealRoot::new(fam(SU), 0), RealRoot::new(fam(SL), d - 1)],
                FamilyKind::NonSymmetric => vec![RealRoot::new(fam(LL), 0), RealRoot::new(fam(SU), d)],
            };
            phi_subsystem(cd, &gens)
        })
        .collect()
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

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn delta_eps_values() {
        assert_eq!(delta_d(&cd(5, 1), 1).unwrap(), big(3));
        assert_eq!(delta_d(&cd(5, 1), 2).unwrap(), big(7));
        assert_eq!(delta_d(&cd(2, 2), 3).unwrap(), big(2));
        assert!(delta_d(&cd(5, 1), 0).is_err());
        assert_eq!(eps_d(&cd(7, 3), 0).unwrap(), big(1));
        assert_eq!(eps_d(&cd(5, 1), 1).unwrap(), big(2));
        assert_eq!(eps_d(&cd(4, 1), 2).unwrap(), big(1));
    }

    #[test]
    fn index_set_examples() {
        let s = index_sets(&[r(SU, 0)]).unwrap();
        assert_eq!(s, IndexSets { long_set: IndexSet::Empty, short_set: IndexSet::Arith { r: 0, modulus: 0 } });
        let s = index_sets(&[r(SU, 0), r(SL, 1)]).unwrap();
        assert_eq!(s.short_set, IndexSet::Arith { r: 0, modulus: 2 });
        assert_eq!(s.long_set, IndexSet::Empty);
        let s = index_sets(&[r(LL, 0), r(SU, 0)]).unwrap();
        assert_eq!(s.long_set, IndexSet::Arith { r: 0, modulus: 1 });
        assert_eq!(s.short_set, IndexSet::Arith { r: 0, modulus: 1 });
        assert!(index_sets(&[]).is_err());
    }

    #[test]
    fn phi_examples() {
        let c = cd(5, 1);
        let p = phi_subsystem(&c, &[r(SU, 0), r(SL, 0)]).unwrap();
        assert_eq!(p.shape, Shape::IIS { r: 0, d: 1 });
        assert_eq!(p.cartan, vec![vec![big(2), big(-3)], vec![big(-3), big(2)]]);
        let p = phi_subsystem(&c, &[r(LL, 0), r(SU, 0)]).unwrap();
        assert_eq!(p.shape, Shape::IILS { r: 0, d: 0 });
        assert_eq!(p.cartan, vec![vec![big(2), big(-1)], vec![big(-5), big(2)]]);
        let p = phi_subsystem(&c, &[r(SU, 0), r(SL, 1)]).unwrap();
        assert_eq!(p.shape, Shape::IIS { r: 0, d: 2 });
        assert_eq!(p.cartan_type(), Some((big(7), big(7))));
    }

    #[test]
    fn delta_examples() {
        let c = cd(5, 1);
        let p = delta_re_subsystem(&c, &[r(SU, 0), r(SL, 0)]).unwrap();
        assert_eq!(p.shape, Shape::IILS { r: 0, d: 0 });
        let p = delta_re_subsystem(&c, &[r(SU, 0), r(SL, 1)]).unwrap();
        assert_eq!(p.shape, Shape::IIS { r: 0, d: 2 });
        let p = delta_re_subsystem(&cd(4, 1), &[r(SU, 0), r(SL, 2)]).unwrap();
        assert_eq!(p.shape, Shape::IILS { r: 1, d: 1 });
        assert_eq!(p.simple_roots, vec![r(LL, 1), r(SU, 0)]);
    }

    #[test]
    fn closure_examples() {
        let s = phi_closure_oracle(&[r(SU, 0)], 5);
        assert_eq!(s, [r(SU, 0), r(SL, -1)].into_iter().collect());
        let s = phi_closure_oracle(&[r(SU, 0), r(SL, 0)], 4);
        assert!(s.iter().all(|x| !x.family.in_alpha1_orbit()));
        assert_eq!(s.len(), 18);
    }

    #[test]
    fn membership_examples() {
        let c = cd(5, 1);
        assert!(delta_re_membership_oracle(&c, &[r(LL, 0), r(SU, 0)], r(LU, 7)));
        assert!(delta_re_membership_oracle(&c, &[r(SU, 0), r(SL, 0)], r(LL, 3)));
        assert!(!delta_re_membership_oracle(&c, &[r(LL, 0), r(LU, 0)], r(SU, 0)));
    }

    #[test]
    fn divisibility_examples() {
        let c = cd(5, 1);
        assert_eq!(gamma(&c, 1) * delta_any(&c, 2), gamma(&c, 3) - gamma(&c, 1));
        let c4 = cd(4, 1);
        assert!(eta(&c4, 1).is_multiple_of(&gamma(&c4, 3)));
        for (a, b) in [(5, 1), (4, 1), (2, 2), (3, 2), (7, 3)] {
            let rep = divisibility_suite(&cd(a, b), 4, 10);
            assert!(rep.passed(), "H({a},{b}):\n{rep}");
        }
    }

    #[test]
    fn family_examples() {
        let ty = |v: Vec<SubsystemDescriptor>| v.iter().map(|d| d.cartan_type().unwrap()).collect::<Vec<_>>();
        assert_eq!(ty(infinite_family(&cd(5, 1), FamilyKind::Symmetric, 2).unwrap()), vec![(big(3), big(3)), (big(7), big(7))]);
        assert_eq!(
            ty(infinite_family(&cd(5, 1), FamilyKind::NonSymmetric, 2).unwrap()),
            vec![(big(10), big(2)), (big(25), big(5))]
        );
        assert_eq!(ty(infinite_family(&cd(3, 2), FamilyKind::Symmetric, 1).unwrap()), vec![(big(4), big(4))]);
        assert!(infinite_family(&cd(4, 1), FamilyKind::Symmetric, 1).is_err());
        assert!(infinite_family(&cd(5, 5), FamilyKind::NonSymmetric, 1).is_err());
    }
}
