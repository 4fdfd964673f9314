//! Scenario files: JSON schema, loading and resolution into library values.

use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::action::CategoricalAction;
use crate::cohomology::ExtensionPresentation;
use crate::condense::EtaleAlgebra;
use crate::error::{Error, Limits};
use crate::groups::library::nonabelian_library;
use crate::groups::{CayleyGroup, FiniteAbelianGroup, FiniteGroup, GroupHom};
use crate::metric::{drinfeld_double_abelian, MetricGroup};
use crate::qz::QZ;
use crate::universal::UniversalScenario;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// A metric group, optionally with an algebra and a symmetry.
    Metric,
    /// An explicit group extension.
    Universal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<MetricSpec>,
    /// Omitted: the trivial algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetrySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricType {
    /// The trivial category. No other fields.
    Trivial,
    /// `factors` and `q` listed for every element in index order.
    Table,
    /// `Z_order` with `q(k) = k²·q1`.
    Cyclic,
    /// `Z(Vec(A))` for `A` with the given `factors`; flux coordinates first.
    Double,
    /// Deligne product of `parts`, coordinates concatenated in order.
    Product,
    /// The reverse of `of`.
    Reverse,
}

impl MetricType {
    fn name(self) -> &'static str {
        match self {
            MetricType::Trivial => "trivial",
            MetricType::Table => "table",
            MetricType::Cyclic => "cyclic",
            MetricType::Double => "double",
            MetricType::Product => "product",
            MetricType::Reverse => "reverse",
        }
    }

    fn fields(self) -> &'static [&'static str] {
        match self {
            MetricType::Trivial => &[],
            MetricType::Table => &["factors", "q"],
            MetricType::Cyclic => &["order", "q1"],
            MetricType::Double => &["factors"],
            MetricType::Product => &["parts"],
            MetricType::Reverse => &["of"],
        }
    }
}

/// A metric group. Which fields apply depends on `type`; `labels` always may.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricSpec {
    #[serde(rename = "type")]
    pub kind: MetricType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<QZ>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q1: Option<QZ>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<MetricSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub of: Option<Box<MetricSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl MetricSpec {
    fn empty(kind: MetricType) -> Self {
        MetricSpec {
            kind,
            factors: None,
            q: None,
            order: None,
            q1: None,
            parts: None,
            of: None,
            labels: None,
        }
    }

    pub fn trivial() -> Self {
        Self::empty(MetricType::Trivial)
    }

    pub fn table(factors: Vec<usize>, q: Vec<QZ>) -> Self {
        MetricSpec {
            factors: Some(factors),
            q: Some(q),
            ..Self::empty(MetricType::Table)
        }
    }

    pub fn cyclic(order: usize, q1: QZ) -> Self {
        MetricSpec {
            order: Some(order),
            q1: Some(q1),
            ..Self::empty(MetricType::Cyclic)
        }
    }

    pub fn double(factors: Vec<usize>) -> Self {
        MetricSpec {
            factors: Some(factors),
            ..Self::empty(MetricType::Double)
        }
    }

    pub fn product(parts: Vec<MetricSpec>) -> Self {
        MetricSpec {
            parts: Some(parts),
            ..Self::empty(MetricType::Product)
        }
    }

    pub fn reverse(of: MetricSpec) -> Self {
        MetricSpec {
            of: Some(Box::new(of)),
            ..Self::empty(MetricType::Reverse)
        }
    }

    pub fn labelled(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    fn present(&self) -> Vec<&'static str> {
        [
            ("factors", self.factors.is_some()),
            ("q", self.q.is_some()),
            ("order", self.order.is_some()),
            ("q1", self.q1.is_some()),
            ("parts", self.parts.is_some()),
            ("of", self.of.is_some()),
        ]
        .into_iter()
        .filter_map(|(f, p)| p.then_some(f))
        .collect()
    }
}

/// An anyon: its label, or its coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AnyonRef {
    Label(String),
    Coords(Vec<i64>),
}

impl<'de> Deserialize<'de> for AnyonRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = AnyonRef;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an anyon label or a coordinate array")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<AnyonRef, E> {
                Ok(AnyonRef::Label(v.to_string()))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<AnyonRef, A::Error> {
                let mut coords = Vec::new();
                while let Some(c) = seq.next_element()? {
                    coords.push(c);
                }
                Ok(AnyonRef::Coords(coords))
            }
        }
        d.deserialize_any(V)
    }
}

/// An element of a finite group: its label, or its index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

impl<'de> Deserialize<'de> for ElementRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ElementRef;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a group element label or a nonnegative index")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ElementRef, E> {
                Ok(ElementRef::Label(v.to_string()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ElementRef, E> {
                usize::try_from(v)
                    .map(ElementRef::Index)
                    .map_err(|_| E::custom("element index too large"))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub generators: Vec<AnyonRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupType {
    Trivial,
    Cyclic,
    /// `Z_{d1} × … × Z_{dk}` from `factors`.
    Abelian,
    /// A built-in nonabelian group of order ≤ 16 by `name`, e.g. `S3`, `Dic12`.
    Named,
    /// A Cayley `table` with identity 0, optional `labels`.
    Table,
}

impl GroupType {
    fn name(self) -> &'static str {
        match self {
            GroupType::Trivial => "trivial",
            GroupType::Cyclic => "cyclic",
            GroupType::Abelian => "abelian",
            GroupType::Named => "named",
            GroupType::Table => "table",
        }
    }

    fn fields(self) -> &'static [&'static str] {
        match self {
            GroupType::Trivial => &[],
            GroupType::Cyclic => &["order"],
            GroupType::Abelian => &["factors"],
            GroupType::Named => &["name"],
            GroupType::Table => &["table", "labels"],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(rename = "type")]
    pub kind: GroupType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupSpec {
    fn empty(kind: GroupType) -> Self {
        GroupSpec {
            kind,
            order: None,
            factors: None,
            name: None,
            table: None,
            labels: None,
        }
    }

    pub fn cyclic(order: usize) -> Self {
        GroupSpec {
            order: Some(order),
            ..Self::empty(GroupType::Cyclic)
        }
    }

    pub fn named(name: &str) -> Self {
        GroupSpec {
            name: Some(name.to_string()),
            ..Self::empty(GroupType::Named)
        }
    }

    pub fn table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Self {
        GroupSpec {
            table: Some(table),
            labels,
            ..Self::empty(GroupType::Table)
        }
    }

    fn present(&self) -> Vec<&'static str> {
        [
            ("order", self.order.is_some()),
            ("factors", self.factors.is_some()),
            ("name", self.name.is_some()),
            ("table", self.table.is_some()),
            ("labels", self.labels.is_some()),
        ]
        .into_iter()
        .filter_map(|(f, p)| p.then_some(f))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetrySpec {
    pub group: GroupSpec,
    /// Generators of `G`; `isometries[i]` is the action of `generators[i]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<ElementRef>,
    /// For each generator, the images of the coordinate generators of the
    /// metric group in coordinate order. Omitted: `G` permutes no anyons.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub isometries: Vec<Vec<AnyonRef>>,
    /// Nonzero values of `ω(g, h)`; unlisted pairs are the unit.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fractionalization: Vec<OmegaEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaEntry {
    pub g: ElementRef,
    pub h: ElementRef,
    pub value: AnyonRef,
}

/// Either `total` with generators of a normal subgroup `N` (then `G = E/N`),
/// or all three groups with explicit `inclusion` and `projection` tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    pub total: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_generators: Option<Vec<ElementRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inclusion: Option<Vec<ElementRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<Vec<ElementRef>>,
}

/// A failure to load a scenario, located by field path and source line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadError {
    pub path: String,
    pub line: Option<usize>,
    pub error: Error,
}

impl LoadError {
    pub fn new(path: impl Into<String>, error: Error) -> Self {
        LoadError {
            path: path.into(),
            line: None,
            error,
        }
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.path.is_empty(), self.line) {
            (true, Some(l)) => write!(f, "line {l}: {}", self.error),
            (true, None) => write!(f, "{}", self.error),
            (false, Some(l)) => write!(f, "{} (line {l}): {}", self.path, self.error),
            (false, None) => write!(f, "{}: {}", self.path, self.error),
        }
    }
}

fn at(path: &str) -> impl Fn(Error) -> LoadError + '_ {
    move |error| LoadError::new(path, error)
}

/// Parses a scenario and checks its shape, reporting the failing field and line.
pub fn parse(text: &str) -> Result<Scenario, LoadError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        LoadError {
            path: if path == "." { String::new() } else { path },
            line: (inner.line() > 0).then_some(inner.line()),
            error: Error::Invalid(inner.to_string()),
        }
    })?;
    scenario.check_shape().map_err(|e| with_line(e, text))?;
    Ok(scenario)
}

/// Fills in the line of `e.path` when the error came from a later stage.
pub fn with_line(mut e: LoadError, text: &str) -> LoadError {
    if e.line.is_none() && !e.path.is_empty() {
        e.line = locate(text, &e.path);
    }
    e
}

/// Line of the last key of `path` (`a.b[2].c`) in `text`, when found.
pub fn locate(text: &str, path: &str) -> Option<usize> {
    let mut offset = 0;
    let mut found = None;
    for key in path.split(['.', '[']).filter(|k| !k.is_empty() && !k.ends_with(']')) {
        let needle = format!("\"{key}\"");
        let at = text[offset..]
            .match_indices(&needle)
            .map(|(i, _)| i + offset)
            .find(|&i| text[i + needle.len()..].trim_start().starts_with(':'))?;
        offset = at + needle.len();
        found = Some(at);
    }
    found.map(|at| text[..at].matches('\n').count() + 1)
}

fn check_fields(kind: &str, allowed: &[&str], present: &[&str], required: &[&str], path: &str) -> Result<(), LoadError> {
    if let Some(extra) = present.iter().find(|f| !allowed.contains(f)) {
        return Err(LoadError::new(
            format!("{path}.{extra}"),
            Error::Invalid(format!("field `{extra}` does not apply to type `{kind}`")),
        ));
    }
    if let Some(missing) = required.iter().find(|f| !present.contains(f)) {
        return Err(LoadError::new(
            path,
            Error::Invalid(format!("type `{kind}` requires field `{missing}`")),
        ));
    }
    Ok(())
}

fn check_metric_shape(spec: &MetricSpec, path: &str) -> Result<(), LoadError> {
    let k = spec.kind;
    check_fields(k.name(), k.fields(), &spec.present(), k.fields(), path)?;
    if let Some(parts) = &spec.parts {
        for (i, p) in parts.iter().enumerate() {
            check_metric_shape(p, &format!("{path}.parts[{i}]"))?;
        }
    }
    if let Some(of) = &spec.of {
        check_metric_shape(of, &format!("{path}.of"))?;
    }
    Ok(())
}

fn check_group_shape(spec: &GroupSpec, path: &str) -> Result<(), LoadError> {
    let k = spec.kind;
    let required: &[&str] = match k {
        GroupType::Table => &["table"],
        _ => k.fields(),
    };
    check_fields(k.name(), k.fields(), &spec.present(), required, path)
}

impl Scenario {
    pub fn metric(description: &str, metric: MetricSpec) -> Self {
        Scenario {
            kind: Kind::Metric,
            description: description.to_string(),
            notes: Vec::new(),
            metric: Some(metric),
            algebra: None,
            symmetry: None,
            extension: None,
        }
    }

    pub fn universal(description: &str, extension: ExtensionSpec) -> Self {
        Scenario {
            kind: Kind::Universal,
            description: description.to_string(),
            notes: Vec::new(),
            metric: None,
            algebra: None,
            symmetry: None,
            extension: Some(extension),
        }
    }

    /// Sections required and allowed by `kind`, and per-type fields.
    pub fn check_shape(&self) -> Result<(), LoadError> {
        let kind = self.kind_name();
        let forbid = |present: bool, section: &str| {
            if present {
                Err(LoadError::new(
                    section,
                    Error::Invalid(format!("section `{section}` does not apply to kind `{kind}`")),
                ))
            } else {
                Ok(())
            }
        };
        let require = |present: bool, section: &str| {
            if present {
                Ok(())
            } else {
                Err(LoadError::new(
                    "kind",
                    Error::Invalid(format!("kind `{kind}` requires section `{section}`")),
                ))
            }
        };
        match self.kind {
            Kind::Metric => {
                forbid(self.extension.is_some(), "extension")?;
                require(self.metric.is_some(), "metric")?;
            }
            Kind::Universal => {
                forbid(self.metric.is_some(), "metric")?;
                forbid(self.algebra.is_some(), "algebra")?;
                forbid(self.symmetry.is_some(), "symmetry")?;
                require(self.extension.is_some(), "extension")?;
            }
        }
        if let Some(m) = &self.metric {
            check_metric_shape(m, "metric")?;
        }
        if let Some(s) = &self.symmetry {
            check_group_shape(&s.group, "symmetry.group")?;
        }
        if let Some(e) = &self.extension {
            check_group_shape(&e.total, "extension.total")?;
            if let Some(k) = &e.kernel {
                check_group_shape(k, "extension.kernel")?;
            }
            if let Some(q) = &e.quotient {
                check_group_shape(q, "extension.quotient")?;
            }
        }
        Ok(())
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Kind::Metric => "metric",
            Kind::Universal => "universal",
        }
    }
}

/// A metric scenario turned into library values.
#[derive(Debug, Clone)]
pub struct ResolvedMetric {
    pub metric: MetricGroup,
    pub algebra: Option<EtaleAlgebra>,
    pub action: Option<CategoricalAction>,
}

fn field<'a, T>(v: &'a Option<T>, path: &str, name: &str) -> Result<&'a T, LoadError> {
    v.as_ref()
        .ok_or_else(|| LoadError::new(path, Error::Invalid(format!("missing field `{name}`"))))
}

/// Builds the metric group; `path` locates `spec` for error messages.
pub fn build_metric(spec: &MetricSpec, path: &str, limits: &Limits) -> Result<MetricGroup, LoadError> {
    let here = at(path);
    let m = match spec.kind {
        MetricType::Trivial => MetricGroup::trivial(),
        MetricType::Table => {
            let factors = field(&spec.factors, path, "factors")?;
            let q = field(&spec.q, path, "q")?;
            let g = FiniteAbelianGroup::new(factors.clone()).map_err(at(&format!("{path}.factors")))?;
            limits.check_group("metric group", g.order()).map_err(&here)?;
            MetricGroup::new(g, q.clone(), None).map_err(&here)?
        }
        MetricType::Cyclic => {
            let order = *field(&spec.order, path, "order")?;
            let q1 = *field(&spec.q1, path, "q1")?;
            if order == 0 {
                return Err(LoadError::new(
                    format!("{path}.order"),
                    Error::InvalidGroup("order must be positive".into()),
                ));
            }
            limits.check_group("metric group", order).map_err(&here)?;
            MetricGroup::cyclic(order, q1).map_err(&here)?
        }
        MetricType::Double => {
            let factors = field(&spec.factors, path, "factors")?;
            let a = FiniteAbelianGroup::new(factors.clone()).map_err(at(&format!("{path}.factors")))?;
            limits
                .check_group("metric group", a.order().saturating_mul(a.order()))
                .map_err(&here)?;
            drinfeld_double_abelian(&a, limits).map_err(&here)?
        }
        MetricType::Product => {
            let parts = field(&spec.parts, path, "parts")?;
            let mut acc: Option<MetricGroup> = None;
            for (i, p) in parts.iter().enumerate() {
                let next = build_metric(p, &format!("{path}.parts[{i}]"), limits)?;
                acc = Some(match acc {
                    None => next,
                    Some(a) => {
                        limits
                            .check_group("metric group", a.order().saturating_mul(next.order()))
                            .map_err(&here)?;
                        a.product(&next)
                    }
                });
            }
            acc.unwrap_or_else(MetricGroup::trivial)
        }
        MetricType::Reverse => build_metric(field(&spec.of, path, "of")?, &format!("{path}.of"), limits)?.reversed(),
    };
    match &spec.labels {
        Some(l) => m.with_labels(l.clone()).map_err(at(&format!("{path}.labels"))),
        None => Ok(m),
    }
}

fn anyon(m: &MetricGroup, r: &AnyonRef) -> Result<usize, Error> {
    match r {
        AnyonRef::Label(l) => {
            if let Some(x) = m.find_label(l) {
                return Ok(x);
            }
            if l == "1" || l == "0" {
                return Ok(0);
            }
            let g = m.group();
            g.elements()
                .find(|&x| g.element_label(x) == *l)
                .ok_or_else(|| Error::Invalid(format!("unknown anyon `{l}`")))
        }
        AnyonRef::Coords(c) => m.group().index(c),
    }
}

fn anyons(m: &MetricGroup, refs: &[AnyonRef], path: &str) -> Result<Vec<usize>, LoadError> {
    refs.iter()
        .enumerate()
        .map(|(i, r)| anyon(m, r).map_err(at(&format!("{path}[{i}]"))))
        .collect()
}

pub fn build_group(spec: &GroupSpec, path: &str) -> Result<CayleyGroup, LoadError> {
    match spec.kind {
        GroupType::Trivial => Ok(CayleyGroup::trivial()),
        GroupType::Cyclic => {
            let order = *field(&spec.order, path, "order")?;
            if order == 0 {
                return Err(LoadError::new(
                    format!("{path}.order"),
                    Error::InvalidGroup("order must be positive".into()),
                ));
            }
            Ok(CayleyGroup::cyclic(order))
        }
        GroupType::Abelian => Ok(FiniteAbelianGroup::new(field(&spec.factors, path, "factors")?.clone())
            .map_err(at(&format!("{path}.factors")))?
            .to_cayley()),
        GroupType::Named => {
            let name = field(&spec.name, path, "name")?;
            let key = ascii_name(name);
            nonabelian_library()
                .into_iter()
                .find(|(n, _)| ascii_name(n) == key)
                .map(|(_, g)| g)
                .ok_or_else(|| {
                    let known: Vec<String> = nonabelian_library().into_iter().map(|(n, _)| ascii_name(&n)).collect();
                    LoadError::new(
                        format!("{path}.name"),
                        Error::InvalidGroup(format!("unknown group `{name}`; known: {}", known.join(", "))),
                    )
                })
        }
        GroupType::Table => {
            CayleyGroup::from_table(field(&spec.table, path, "table")?.clone(), spec.labels.clone()).map_err(at(path))
        }
    }
}

/// Lowercase ASCII form of a group name: `Dic₁₂` becomes `dic12`.
fn ascii_name(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
            '×' => 'x',
            '⋊' => ':',
            '∘' => 'o',
            '²' => '2',
            c => c,
        })
        .flat_map(char::to_lowercase)
        .collect()
}

fn element(g: &CayleyGroup, r: &ElementRef) -> Result<usize, Error> {
    match r {
        ElementRef::Index(i) if *i < g.order() => Ok(*i),
        ElementRef::Index(i) => Err(Error::Invalid(format!("element index {i} out of range"))),
        ElementRef::Label(l) => g
            .find(l)
            .ok_or_else(|| Error::Invalid(format!("unknown group element `{l}`"))),
    }
}

fn elements(g: &CayleyGroup, refs: &[ElementRef], path: &str) -> Result<Vec<usize>, LoadError> {
    refs.iter()
        .enumerate()
        .map(|(i, r)| element(g, r).map_err(at(&format!("{path}[{i}]"))))
        .collect()
}

pub fn resolve_metric(s: &Scenario, limits: &Limits) -> Result<ResolvedMetric, LoadError> {
    s.check_shape()?;
    let spec = field(&s.metric, "kind", "metric")?;
    let metric = build_metric(spec, "metric", limits)?;
    let algebra = match &s.algebra {
        None => None,
        Some(a) => {
            let gens = anyons(&metric, &a.generators, "algebra.generators")?;
            Some(EtaleAlgebra::generated_by(&metric, &gens).map_err(at("algebra.generators"))?)
        }
    };
    let action = match &s.symmetry {
        None => None,
        Some(sym) => Some(resolve_action(&metric, sym, limits)?),
    };
    Ok(ResolvedMetric {
        metric,
        algebra,
        action,
    })
}

fn resolve_action(metric: &MetricGroup, sym: &SymmetrySpec, limits: &Limits) -> Result<CategoricalAction, LoadError> {
    let group = build_group(&sym.group, "symmetry.group")?;
    limits
        .check_group("symmetry group", group.order())
        .map_err(at("symmetry.group"))?;
    let generators = elements(&group, &sym.generators, "symmetry.generators")?;
    if !sym.isometries.is_empty() && sym.isometries.len() != generators.len() {
        return Err(LoadError::new(
            "symmetry.isometries",
            Error::Invalid(format!(
                "{} generators but {} isometry lists",
                generators.len(),
                sym.isometries.len()
            )),
        ));
    }
    let images = sym
        .isometries
        .iter()
        .enumerate()
        .map(|(i, imgs)| {
            let path = format!("symmetry.isometries[{i}]");
            let xs = anyons(metric, imgs, &path)?;
            metric.map_from_unit_images(&xs).map_err(at(&path))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = group.order();
    let mut omega = vec![vec![0; n]; n];
    for (i, entry) in sym.fractionalization.iter().enumerate() {
        let path = format!("symmetry.fractionalization[{i}]");
        let g = element(&group, &entry.g).map_err(at(&format!("{path}.g")))?;
        let h = element(&group, &entry.h).map_err(at(&format!("{path}.h")))?;
        let v = anyon(metric, &entry.value).map_err(at(&format!("{path}.value")))?;
        omega[g][h] = v;
    }
    let built = if sym.isometries.is_empty() {
        let id = GroupHom::identity_on(metric.order());
        CategoricalAction::new(metric.clone(), group.clone(), vec![id; n], omega)
    } else {
        CategoricalAction::from_generators(metric.clone(), group.clone(), &generators, &images, omega)
    };
    built.map_err(|e| {
        let path = match e {
            Error::InvalidHom(_) | Error::NotIsometry(_) => "symmetry.isometries",
            Error::Invalid(_) => "symmetry.generators",
            _ if sym.fractionalization.is_empty() => "symmetry",
            _ => "symmetry.fractionalization",
        };
        LoadError::new(path, e)
    })
}

pub fn resolve_universal(s: &Scenario, limits: &Limits) -> Result<UniversalScenario, LoadError> {
    s.check_shape()?;
    let ext = field(&s.extension, "kind", "extension")?;
    let total = build_group(&ext.total, "extension.total")?;
    limits
        .check_group("extension group", total.order())
        .map_err(at("extension.total"))?;
    if let Some(gens) = &ext.normal_generators {
        if ext.kernel.is_some() || ext.quotient.is_some() || ext.inclusion.is_some() || ext.projection.is_some() {
            return Err(LoadError::new(
                "extension.normal_generators",
                Error::Invalid("give either normal_generators or kernel/quotient/inclusion/projection, not both".into()),
            ));
        }
        let gens = elements(&total, gens, "extension.normal_generators")?;
        return UniversalScenario::from_total(total, &gens).map_err(at("extension.normal_generators"));
    }
    let kernel = build_group(field(&ext.kernel, "extension", "kernel")?, "extension.kernel")?;
    let quotient = build_group(field(&ext.quotient, "extension", "quotient")?, "extension.quotient")?;
    let inclusion = elements(&total, field(&ext.inclusion, "extension", "inclusion")?, "extension.inclusion")?;
    let projection = elements(
        &quotient,
        field(&ext.projection, "extension", "projection")?,
        "extension.projection",
    )?;
    let inclusion = GroupHom::new(&kernel, &total, inclusion).map_err(at("extension.inclusion"))?;
    let projection = GroupHom::new(&total, &quotient, projection).map_err(at("extension.projection"))?;
    let pres = ExtensionPresentation::new(kernel, quotient, total, inclusion, projection).map_err(at("extension"))?;
    UniversalScenario::new(pres).map_err(at("extension"))
}
