//! Instance files.
//!
//! An instance is a JSON object with the keys `spaces`, `cones`, `sets`,
//! `maps`, `points` and `checks`. Numbers are strings (`"3"`, `"-1/2"`) or
//! JSON integers; anything with a fraction or exponent is rejected. A
//! polyhedron is `{"ineq": [[a1, ..., an, b], ...], "eq": [...]}` standing for
//! `a·x ≤ b` and `a·x = b`. Points are flat tuples; a check splits them by
//! the dimensions of the data it references, e.g. `(x̄, z̄)` for a sum rule.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use setcalc_core::exactgeom::parse_rational;
use setcalc_core::{Constraint, OrderCone, PolyMap, PolySet, Polyhedron, RatVec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Invalid JSON or an unknown key.
    Syntax,
    MalformedRational,
    DimensionMismatch,
    UnresolvedReference,
    /// Strict inequalities describe open sets, which have no closed polyhedral graph.
    OpenSetRejected,
    /// A declared cone is not a cone with apex at the origin.
    NotACone,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "Syntax",
            ParseErrorKind::MalformedRational => "MalformedRational",
            ParseErrorKind::DimensionMismatch => "DimensionMismatch",
            ParseErrorKind::UnresolvedReference => "UnresolvedReference",
            ParseErrorKind::OpenSetRejected => "OpenSetRejected",
            ParseErrorKind::NotACone => "NotACone",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Location inside the document, e.g. `maps.F1.graph.pieces[0].ineq[2]`.
    pub path: String,
    pub message: String,
    /// 1-based position of the offending token when it can be located.
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, "line {l}, column {c}: ")?;
        }
        write!(f, "{}", self.kind.as_str())?;
        if !self.path.is_empty() {
            write!(f, " at {}", self.path)?;
        }
        write!(f, ": {}", self.message)
    }
}

/// Named check specifications; the point is split according to the data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckSpec {
    /// Point `(x̄, z̄)`.
    SumRule { maps: [String; 2], cone: String, point: String },
    /// Point `(x̄, z̄)`; `cones` are `[Θ₁, Θ₂]`.
    ChainRule { inner: String, outer: String, cones: [String; 2], point: String },
    /// Point `(x̄, z̄)`.
    RestrictedSum { map: String, set: String, cone: String, point: String },
    EpiSumIdentity { maps: [String; 2], cone: String },
    EpiChainIdentity { inner: String, outer: String, cones: [String; 2] },
    /// Point `x̄`.
    IndicatorIdentity { set: String, cone: String, point: String },
    /// Point `(x̄, z̄)`.
    SingleValuedChain { inner: String, outer: String, cones: [String; 2], point: String },
    /// Point `(x̄, ȳ, z̄)`.
    WellposedChain { inner: String, outer: String, cones: [String; 2], point: String },
}

impl CheckSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            CheckSpec::SumRule { .. } => "sum_rule",
            CheckSpec::ChainRule { .. } => "chain_rule",
            CheckSpec::RestrictedSum { .. } => "restricted_sum",
            CheckSpec::EpiSumIdentity { .. } => "epi_sum_identity",
            CheckSpec::EpiChainIdentity { .. } => "epi_chain_identity",
            CheckSpec::IndicatorIdentity { .. } => "indicator_identity",
            CheckSpec::SingleValuedChain { .. } => "single_valued_chain",
            CheckSpec::WellposedChain { .. } => "wellposed_chain",
        }
    }

    /// Short argument list for report headers.
    pub fn describe(&self) -> String {
        match self {
            CheckSpec::SumRule { maps, cone, point } => format!("{} + {}, {cone}, at {point}", maps[0], maps[1]),
            CheckSpec::ChainRule { inner, outer, cones, point }
            | CheckSpec::SingleValuedChain { inner, outer, cones, point }
            | CheckSpec::WellposedChain { inner, outer, cones, point } => {
                format!("{outer} ∘ {inner}, {}, {}, at {point}", cones[0], cones[1])
            }
            CheckSpec::RestrictedSum { map, set, cone, point } => format!("{map} on {set}, {cone}, at {point}"),
            CheckSpec::EpiSumIdentity { maps, cone } => format!("{} + {}, {cone}", maps[0], maps[1]),
            CheckSpec::EpiChainIdentity { inner, outer, cones } => {
                format!("{outer} ∘ {inner}, {}, {}", cones[0], cones[1])
            }
            CheckSpec::IndicatorIdentity { set, cone, point } => format!("{set}, {cone}, at {point}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Instance {
    pub spaces: BTreeMap<String, usize>,
    pub cones: BTreeMap<String, OrderCone>,
    pub sets: BTreeMap<String, PolySet>,
    pub maps: BTreeMap<String, PolyMap>,
    pub points: BTreeMap<String, RatVec>,
    pub checks: Vec<CheckSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawDim {
    Count(usize),
    Space(String),
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct RawPolyhedron {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<RawDim>,
    #[serde(default)]
    ineq: Vec<Vec<Value>>,
    #[serde(default)]
    eq: Vec<Vec<Value>>,
    #[serde(flatten)]
    extra: BTreeMap<String, Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSet {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<RawDim>,
    pieces: Vec<RawPolyhedron>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    dom_dim: RawDim,
    rng_dim: RawDim,
    graph: RawSet,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default)]
    spaces: BTreeMap<String, usize>,
    #[serde(default)]
    cones: BTreeMap<String, RawPolyhedron>,
    #[serde(default)]
    sets: BTreeMap<String, RawSet>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    points: BTreeMap<String, Vec<Value>>,
    #[serde(default)]
    checks: Vec<CheckSpec>,
}

const OPEN_KEYS: [&str; 5] = ["strict", "lt", "gt", "strict_ineq", "open"];

/// Collects errors while walking the raw document.
struct Validator<'a> {
    text: &'a str,
    spaces: BTreeMap<String, usize>,
    /// `(what, name)` of every entry present in the document, valid or not.
    defined: BTreeSet<(&'static str, String)>,
    errors: Vec<ParseError>,
}

impl Validator<'_> {
    fn error(&mut self, kind: ParseErrorKind, path: impl Into<String>, message: impl Into<String>, needle: Option<&str>) {
        let (line, column) = needle.and_then(|n| locate(self.text, n)).map_or((None, None), |(l, c)| (Some(l), Some(c)));
        self.errors.push(ParseError { kind, path: path.into(), message: message.into(), line, column });
    }

    fn dim(&mut self, d: &RawDim, path: &str) -> Option<usize> {
        match d {
            RawDim::Count(n) => Some(*n),
            RawDim::Space(name) => match self.spaces.get(name) {
                Some(n) => Some(*n),
                None => {
                    self.error(
                        ParseErrorKind::UnresolvedReference,
                        path,
                        format!("undefined space \"{name}\""),
                        Some(&format!("\"{name}\"")),
                    );
                    None
                }
            },
        }
    }

    fn number(&mut self, v: &Value, path: &str) -> Option<Rational> {
        let parsed = match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
            _ => None,
        };
        if parsed.is_none() {
            let needle = match v {
                Value::String(s) => format!("\"{s}\""),
                other => other.to_string(),
            };
            self.error(
                ParseErrorKind::MalformedRational,
                path,
                format!("{v} is not an exact rational (use \"p/q\" or an integer)"),
                Some(&needle),
            );
        }
        parsed
    }

    fn numbers(&mut self, row: &[Value], path: &str) -> Option<Vec<Rational>> {
        let mut out = Vec::with_capacity(row.len());
        let mut ok = true;
        for (i, v) in row.iter().enumerate() {
            match self.number(v, &format!("{path}[{i}]")) {
                Some(r) => out.push(r),
                None => ok = false,
            }
        }
        ok.then_some(out)
    }

    /// Parses a polyhedron of dimension `expected` when known, else infers it from the rows.
    fn polyhedron(&mut self, raw: &RawPolyhedron, expected: Option<usize>, path: &str) -> Option<Polyhedron> {
        for key in raw.extra.keys() {
            if OPEN_KEYS.contains(&key.as_str()) {
                self.error(
                    ParseErrorKind::OpenSetRejected,
                    path,
                    format!("\"{key}\" describes a non-closed set; only closed polyhedra are supported"),
                    Some(&format!("\"{key}\"")),
                );
            } else {
                self.error(ParseErrorKind::Syntax, path, format!("unknown key \"{key}\""), Some(&format!("\"{key}\"")));
            }
        }
        if !raw.extra.is_empty() {
            return None;
        }
        let declared = match &raw.dim {
            Some(d) => Some(self.dim(d, path)?),
            None => None,
        };
        let dim = match (declared, expected) {
            (Some(a), Some(b)) if a != b => {
                self.error(ParseErrorKind::DimensionMismatch, path, format!("declared dimension {a}, expected {b}"), None);
                return None;
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => match raw.ineq.first().or(raw.eq.first()) {
                Some(row) if !row.is_empty() => row.len() - 1,
                _ => {
                    self.error(ParseErrorKind::DimensionMismatch, path, "cannot infer the dimension; add \"dim\"", None);
                    return None;
                }
            },
        };
        let rows = |rows: &[Vec<Value>], label: &str, v: &mut Self| -> Option<Vec<Constraint>> {
            let mut out = Vec::with_capacity(rows.len());
            let mut ok = true;
            for (i, row) in rows.iter().enumerate() {
                let p = format!("{path}.{label}[{i}]");
                if row.len() != dim + 1 {
                    v.error(
                        ParseErrorKind::DimensionMismatch,
                        &p,
                        format!("row has {} entries, expected {} coefficients and a bound", row.len(), dim),
                        None,
                    );
                    ok = false;
                    continue;
                }
                match v.numbers(row, &p) {
                    Some(mut nums) => {
                        let b = nums.pop().expect("row has a bound");
                        out.push(Constraint::new(RatVec(nums), b));
                    }
                    None => ok = false,
                }
            }
            ok.then_some(out)
        };
        let ineqs = rows(&raw.ineq, "ineq", self);
        let eqs = rows(&raw.eq, "eq", self);
        Some(Polyhedron::from_hrep(dim, ineqs?, eqs?))
    }

    fn set(&mut self, raw: &RawSet, expected: Option<usize>, path: &str) -> Option<PolySet> {
        let declared = match &raw.dim {
            Some(d) => Some(self.dim(d, path)?),
            None => None,
        };
        let mut dim = match (declared, expected) {
            (Some(a), Some(b)) if a != b => {
                self.error(ParseErrorKind::DimensionMismatch, path, format!("declared dimension {a}, expected {b}"), None);
                return None;
            }
            (a, b) => a.or(b),
        };
        let mut pieces = Vec::with_capacity(raw.pieces.len());
        let mut ok = true;
        for (i, p) in raw.pieces.iter().enumerate() {
            match self.polyhedron(p, dim, &format!("{path}.pieces[{i}]")) {
                Some(q) => {
                    dim = Some(q.dim());
                    pieces.push(q);
                }
                None => ok = false,
            }
        }
        match (ok, dim) {
            (true, Some(d)) => Some(PolySet::new(d, pieces)),
            (true, None) => {
                self.error(ParseErrorKind::DimensionMismatch, path, "cannot infer the dimension; add \"dim\"", None);
                None
            }
            (false, _) => None,
        }
    }
}

/// 1-based line and column of the first occurrence of `needle`.
fn locate(text: &str, needle: &str) -> Option<(usize, usize)> {
    let at = text.find(needle)?;
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, column))
}

fn syntax_error(e: &serde_json::Error) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Syntax,
        path: String::new(),
        message: e.to_string(),
        line: Some(e.line()),
        column: Some(e.column()),
    }
}

/// Parses and validates an instance, reporting every error found.
pub fn parse_instance(text: &str) -> Result<Instance, Vec<ParseError>> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| vec![syntax_error(&e)])?;
    let defined = raw
        .cones
        .keys()
        .map(|k| ("cone", k.clone()))
        .chain(raw.sets.keys().map(|k| ("set", k.clone())))
        .chain(raw.maps.keys().map(|k| ("map", k.clone())))
        .chain(raw.points.keys().map(|k| ("point", k.clone())))
        .collect();
    let mut v = Validator { text, spaces: raw.spaces.clone(), defined, errors: Vec::new() };
    let mut inst = Instance { spaces: raw.spaces.clone(), ..Instance::default() };

    for (name, c) in &raw.cones {
        let path = format!("cones.{name}");
        if let Some(p) = v.polyhedron(c, None, &path) {
            match OrderCone::new(p) {
                Ok(cone) => {
                    inst.cones.insert(name.clone(), cone);
                }
                Err(_) => v.error(
                    ParseErrorKind::NotACone,
                    &path,
                    "every bound must be zero and the set nonempty",
                    Some(&format!("\"{name}\"")),
                ),
            }
        }
    }
    for (name, s) in &raw.sets {
        if let Some(set) = v.set(s, None, &format!("sets.{name}")) {
            inst.sets.insert(name.clone(), set);
        }
    }
    for (name, m) in &raw.maps {
        let path = format!("maps.{name}");
        let (Some(n), Some(k)) = (v.dim(&m.dom_dim, &path), v.dim(&m.rng_dim, &path)) else { continue };
        if let Some(graph) = v.set(&m.graph, Some(n + k), &format!("{path}.graph")) {
            let map = PolyMap::new(n, k, graph).expect("graph dimension was checked");
            inst.maps.insert(name.clone(), map);
        }
    }
    for (name, coords) in &raw.points {
        if let Some(p) = v.numbers(coords, &format!("points.{name}")) {
            inst.points.insert(name.clone(), RatVec(p));
        }
    }
    for (i, check) in raw.checks.iter().enumerate() {
        validate_check(&mut v, &inst, check, &format!("checks[{i}]"));
    }
    inst.checks = raw.checks;
    if v.errors.is_empty() {
        Ok(inst)
    } else {
        Err(v.errors)
    }
}

/// Resolves the names used by a check and compares the dimensions they imply.
struct CheckValidator<'a, 'b> {
    v: &'a mut Validator<'b>,
    inst: &'a Instance,
    path: &'a str,
    unresolved: bool,
    /// `(what, found, expected)` dimension pairs, compared once every name resolves.
    dims: Vec<(String, usize, usize)>,
}

impl CheckValidator<'_, '_> {
    fn resolve<T>(&mut self, what: &'static str, name: &str, found: Option<T>) -> Option<T> {
        if found.is_none() {
            self.unresolved = true;
            if self.v.defined.contains(&(what, name.to_owned())) {
                // Already reported where it is defined.
                return None;
            }
            self.v.error(
                ParseErrorKind::UnresolvedReference,
                self.path,
                format!("undefined {what} \"{name}\""),
                Some(&format!("\"{name}\"")),
            );
        }
        found
    }

    fn map(&mut self, name: &str) -> Option<(usize, usize)> {
        let found = self.inst.maps.get(name).map(|m| (m.dom_dim(), m.rng_dim()));
        self.resolve("map", name, found)
    }

    fn cone(&mut self, name: &str) -> Option<usize> {
        let found = self.inst.cones.get(name).map(OrderCone::dim);
        self.resolve("cone", name, found)
    }

    fn set(&mut self, name: &str) -> Option<usize> {
        let found = self.inst.sets.get(name).map(PolySet::dim);
        self.resolve("set", name, found)
    }

    fn point(&mut self, name: &str) -> Option<usize> {
        let found = self.inst.points.get(name).map(RatVec::dim);
        self.resolve("point", name, found)
    }

    fn expect(&mut self, what: String, found: Option<usize>, expected: Option<usize>) {
        if let (Some(f), Some(e)) = (found, expected) {
            self.dims.push((what, f, e));
        }
    }

    /// Returns `(dim X, dim Z)` of the sum.
    fn sum(&mut self, maps: &[String; 2], cone: &str) -> Option<(usize, usize)> {
        let a = self.map(&maps[0]);
        let b = self.map(&maps[1]);
        let c = self.cone(cone);
        let (n, m) = a?;
        self.expect(format!("domain of {}", maps[1]), b.map(|d| d.0), Some(n));
        self.expect(format!("range of {}", maps[1]), b.map(|d| d.1), Some(m));
        self.expect(format!("cone {cone}"), c, Some(m));
        Some((n, m))
    }

    /// Returns `(dim X, dim Y, dim Z)` of the composition.
    fn chain(&mut self, inner: &str, outer: &str, cones: &[String; 2]) -> Option<(usize, usize, usize)> {
        let g = self.map(inner);
        let f = self.map(outer);
        let c1 = self.cone(&cones[0]);
        let c2 = self.cone(&cones[1]);
        let ((n, k), (k2, m)) = (g?, f?);
        self.expect(format!("domain of {outer}"), Some(k2), Some(k));
        self.expect(format!("cone {}", cones[0]), c1, Some(k));
        self.expect(format!("cone {}", cones[1]), c2, Some(m));
        Some((n, k, m))
    }

    fn finish(self) {
        if self.unresolved {
            return;
        }
        for (what, found, expected) in self.dims.into_iter().filter(|(_, f, e)| f != e) {
            self.v.error(
                ParseErrorKind::DimensionMismatch,
                self.path,
                format!("{what} has dimension {found}, expected {expected}"),
                None,
            );
        }
    }
}

fn validate_check(v: &mut Validator<'_>, inst: &Instance, check: &CheckSpec, path: &str) {
    let mut c = CheckValidator { v, inst, path, unresolved: false, dims: Vec::new() };
    match check {
        CheckSpec::SumRule { maps, cone, point } => {
            let dims = c.sum(maps, cone);
            let p = c.point(point);
            c.expect(format!("point {point}"), p, dims.map(|(n, m)| n + m));
        }
        CheckSpec::EpiSumIdentity { maps, cone } => {
            c.sum(maps, cone);
        }
        CheckSpec::ChainRule { inner, outer, cones, point } | CheckSpec::SingleValuedChain { inner, outer, cones, point } => {
            let dims = c.chain(inner, outer, cones);
            let p = c.point(point);
            c.expect(format!("point {point}"), p, dims.map(|(n, _, m)| n + m));
        }
        CheckSpec::WellposedChain { inner, outer, cones, point } => {
            let dims = c.chain(inner, outer, cones);
            let p = c.point(point);
            c.expect(format!("point {point}"), p, dims.map(|(n, k, m)| n + k + m));
        }
        CheckSpec::EpiChainIdentity { inner, outer, cones } => {
            c.chain(inner, outer, cones);
        }
        CheckSpec::RestrictedSum { map, set, cone, point } => {
            let f = c.map(map);
            let s = c.set(set);
            let k = c.cone(cone);
            let p = c.point(point);
            c.expect(format!("set {set}"), s, f.map(|d| d.0));
            c.expect(format!("cone {cone}"), k, f.map(|d| d.1));
            c.expect(format!("point {point}"), p, f.map(|(n, m)| n + m));
        }
        CheckSpec::IndicatorIdentity { set, cone, point } => {
            let s = c.set(set);
            c.cone(cone);
            let p = c.point(point);
            c.expect(format!("point {point}"), p, s);
        }
    }
    c.finish();
}

fn number_text(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn raw_polyhedron(p: &Polyhedron, with_dim: bool) -> RawPolyhedron {
    let row = |c: &Constraint| c.normal.iter().chain(std::iter::once(&c.offset)).map(number_text).collect();
    let ineq: Vec<Vec<Value>> = p.ineqs().iter().map(row).collect();
    let eq: Vec<Vec<Value>> = p.eqs().iter().map(row).collect();
    let dim = (with_dim || (ineq.is_empty() && eq.is_empty())).then_some(RawDim::Count(p.dim()));
    RawPolyhedron { dim, ineq, eq, extra: BTreeMap::new() }
}

fn raw_set(s: &PolySet) -> RawSet {
    RawSet { dim: Some(RawDim::Count(s.dim())), pieces: s.pieces().iter().map(|p| raw_polyhedron(p, false)).collect() }
}

/// Canonical pretty-printed JSON for an instance; parsing it gives back an equal instance.
pub fn serialize_instance(inst: &Instance) -> String {
    let raw = RawInstance {
        spaces: inst.spaces.clone(),
        cones: inst.cones.iter().map(|(k, c)| (k.clone(), raw_polyhedron(c.cone(), true))).collect(),
        sets: inst.sets.iter().map(|(k, s)| (k.clone(), raw_set(s))).collect(),
        maps: inst
            .maps
            .iter()
            .map(|(k, m)| {
                let raw = RawMap {
                    dom_dim: RawDim::Count(m.dom_dim()),
                    rng_dim: RawDim::Count(m.rng_dim()),
                    graph: raw_set(m.graph()),
                };
                (k.clone(), raw)
            })
            .collect(),
        points: inst.points.iter().map(|(k, p)| (k.clone(), p.iter().map(number_text).collect())).collect(),
        checks: inst.checks.clone(),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("instance serializes");
    out.push('\n');
    out
}

impl Instance {
    /// A named point, or a literal comma-separated tuple such as `1/2,-1`.
    pub fn point_or_literal(&self, word: &str) -> Option<RatVec> {
        if let Some(p) = self.points.get(word) {
            return Some(p.clone());
        }
        word.split(',').map(parse_rational).collect::<Option<Vec<_>>>().map(RatVec)
    }
}
