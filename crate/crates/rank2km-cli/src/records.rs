//! JSON records. Every record carries `schema`, `a` and `b`; lattice integers
//! (coordinates, Q, coroot coefficients, Cartan entries) are decimal strings.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use rank2km::report::Report;
use rank2km::roots::{coords, is_long, q_form};
use rank2km::structure::CommutatorResult;
use rank2km::subsystems::{IndexSet, SubsystemDescriptor};
use rank2km::verify::Suite;
use rank2km::{CartanData, RealRoot, RootClass, RootVector, SignAssignment};

pub const ROOT: &str = "rank2km/root/v1";
pub const CLASSIFY: &str = "rank2km/classify/v1";
pub const COMMUTATOR: &str = "rank2km/commutator/v1";
pub const SUBSYSTEM: &str = "rank2km/subsystem/v1";
pub const VERIFY: &str = "rank2km/verify/v1";

fn header(schema: &str, cd: &CartanData) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), schema.into());
    m.insert("a".into(), cd.a().into());
    m.insert("b".into(), cd.b().into());
    m
}

fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn vector(v: &RootVector) -> Value {
    json!({ "x": big(&v.x), "y": big(&v.y) })
}

fn length(cd: &CartanData, r: RealRoot) -> &'static str {
    if is_long(cd, r) {
        "long"
    } else {
        "short"
    }
}

pub fn root(cd: &CartanData, r: RealRoot) -> Value {
    let v = coords(cd, r);
    let mut m = header(ROOT, cd);
    m.insert("family".into(), r.family.as_str().into());
    m.insert("j".into(), r.j.into());
    m.insert("x".into(), big(&v.x));
    m.insert("y".into(), big(&v.y));
    m.insert("length".into(), length(cd, r).into());
    m.insert("Q".into(), big(&q_form(cd, &v)));
    Value::Object(m)
}

pub fn root_row(cd: &CartanData, r: RealRoot) -> Vec<String> {
    let v = coords(cd, r);
    vec![
        cd.a().to_string(),
        cd.b().to_string(),
        r.family.as_str().to_string(),
        r.j.to_string(),
        v.x.to_string(),
        v.y.to_string(),
        length(cd, r).to_string(),
        q_form(cd, &v).to_string(),
    ]
}

pub fn classification(cd: &CartanData, v: &RootVector, class: &RootClass) -> Value {
    let mut m = header(CLASSIFY, cd);
    m.insert("x".into(), big(&v.x));
    m.insert("y".into(), big(&v.y));
    m.insert("Q".into(), big(&q_form(cd, v)));
    let tag = match class {
        RootClass::Real(r) => {
            m.insert("family".into(), r.family.as_str().into());
            m.insert("j".into(), r.j.into());
            m.insert("length".into(), length(cd, *r).into());
            "real"
        }
        RootClass::Imaginary => "imaginary",
        RootClass::NotARoot => "not_a_root",
        RootClass::Zero => "zero",
    };
    m.insert("class".into(), tag.into());
    Value::Object(m)
}

pub fn commutator(cd: &CartanData, signs: &SignAssignment, alpha: RealRoot, beta: RealRoot, res: &CommutatorResult) -> Value {
    let mut m = header(COMMUTATOR, cd);
    m.insert("alpha".into(), alpha.to_string().into());
    m.insert("beta".into(), beta.to_string().into());
    m.insert("signs".into(), signs.model().as_str().into());
    let tag = match res {
        CommutatorResult::Zero => "zero",
        CommutatorResult::RealVector { n, root } => {
            m.insert("n".into(), (*n).into());
            m.insert("root".into(), root.to_string().into());
            "real"
        }
        CommutatorResult::Coroot { c1, c2 } => {
            m.insert("c1".into(), big(c1));
            m.insert("c2".into(), big(c2));
            "coroot"
        }
        CommutatorResult::ImaginarySpace { vector: v } => {
            m.insert("vector".into(), vector(v));
            "imaginary_space"
        }
    };
    m.insert("result".into(), tag.into());
    Value::Object(m)
}

fn index_set(s: &IndexSet) -> Value {
    match s {
        IndexSet::Empty => json!({ "kind": "empty" }),
        IndexSet::Arith { r, modulus } => json!({ "kind": "arithmetic", "r": r, "modulus": modulus }),
    }
}

pub fn subsystem(cd: &CartanData, mode: &str, gens: &[RealRoot], d: &SubsystemDescriptor) -> Value {
    let mut m = header(SUBSYSTEM, cd);
    m.insert("mode".into(), mode.into());
    m.insert("generators".into(), gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().into());
    m.insert("shape".into(), d.shape.name().into());
    let (r, dd) = d.shape.params();
    m.insert("params".into(), json!({ "r": r, "d": dd }));
    m.insert("simple_roots".into(), d.simple_roots.iter().map(|g| g.to_string()).collect::<Vec<_>>().into());
    let cartan: Vec<Vec<Value>> = d.cartan.iter().map(|row| row.iter().map(big).collect()).collect();
    m.insert("cartan".into(), json!(cartan));
    let inner: Vec<Vec<String>> = d.inner_product.iter().map(|row| row.iter().map(|q| q.to_string()).collect()).collect();
    m.insert("inner_product".into(), json!(inner));
    m.insert(
        "index_sets".into(),
        json!({ "long": index_set(&d.index_sets.long_set), "short": index_set(&d.index_sets.short_set) }),
    );
    let ty = d.cartan_type().map(|(x, y)| json!([big(&x), big(&y)])).unwrap_or(Value::Null);
    m.insert("cartan_type".into(), ty);
    Value::Object(m)
}

pub fn verify(cd: &CartanData, suite: Suite, window: i64, report: &Report) -> Value {
    let mut m = header(VERIFY, cd);
    m.insert("suite".into(), suite.as_str().into());
    m.insert("window".into(), window.into());
    m.insert("passed".into(), report.passed().into());
    m.insert("total_checks".into(), report.total_checks().into());
    m.insert("total_failures".into(), report.total_failures().into());
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "checks": c.checks,
                "failures": c.failures,
                "passed": c.passed(),
                "examples": c.examples,
            })
        })
        .collect();
    m.insert("checks".into(), checks.into());
    Value::Object(m)
}
