//! Typed reports for each command, with JSON and text renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::action::{
    analyze, first_obstruction_witness, induce_condensed_action, subgroup_breakdown,
    symmetry_generators, CategoricalAction, Verdict,
};
use crate::condense::{condense, enumerate_etale, etale_aut_group, EtaleAlgebra};
use crate::error::{Error, Limits, Result};
use crate::groups::library::name_group;
use crate::groups::{CayleyGroup, FiniteGroup};
use crate::metric::{identify_theory, modular_data, MetricGroup};
use crate::qz::QZ;
use crate::universal::{analyze as analyze_universal, cross_check_abelian, CrossCheck, UniversalScenario};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    ModularData(ModularDataReport),
    Etale(EtaleReport),
    Condense(CondenseReport),
    Obstruction(ObstructionReport),
    Splittings(SplittingsReport),
    Induce(InduceReport),
    Universal(UniversalReportOut),
}

impl Report {
    pub fn render(&self) -> String {
        match self {
            Report::ModularData(r) => r.render(),
            Report::Etale(r) => r.render(),
            Report::Condense(r) => r.render(),
            Report::Obstruction(r) => r.render(),
            Report::Splittings(r) => r.render(),
            Report::Induce(r) => r.render(),
            Report::Universal(r) => r.render(),
        }
    }
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn labels_of(m: &MetricGroup) -> Vec<String> {
    (0..m.order()).map(|x| m.label(x)).collect()
}

fn group_labels(g: &CayleyGroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&x| g.element_label(x)).collect()
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        let _ = writeln!(out, "  {}", cells.join("  ").trim_end());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularDataReport {
    pub theory: Option<String>,
    pub group: String,
    pub labels: Vec<String>,
    /// `θ_x = exp(2πi·t[x])`.
    pub twists: Vec<QZ>,
    /// `S = normalization · exp(2πi·s[x][y])`.
    pub s_normalization: String,
    pub s_exponents: Vec<Vec<QZ>>,
}

impl ModularDataReport {
    pub fn build(m: &MetricGroup) -> Self {
        let md = modular_data(m);
        ModularDataReport {
            theory: identify_theory(m).map(String::from),
            group: m.group().name(),
            s_normalization: md.normalization(),
            labels: md.labels,
            twists: md.t_exponents,
            s_exponents: md.s_exponents,
        }
    }

    fn render(&self) -> String {
        let mut out = format!(
            "modular data: {} on {}\n",
            self.theory.as_deref().unwrap_or("pointed theory"),
            self.group
        );
        out.push_str("T = diag(exp(2πi·t)):\n");
        let mut rows = vec![vec!["anyon".to_string(), "t".to_string()]];
        for (l, t) in self.labels.iter().zip(&self.twists) {
            rows.push(vec![l.clone(), t.to_string()]);
        }
        out.push_str(&table(&rows));
        let _ = writeln!(out, "S = {} · exp(2πi·s):", self.s_normalization);
        let mut rows = vec![std::iter::once(String::new()).chain(self.labels.iter().cloned()).collect()];
        for (l, row) in self.labels.iter().zip(&self.s_exponents) {
            rows.push(std::iter::once(l.clone()).chain(row.iter().map(QZ::to_string)).collect());
        }
        out.push_str(&table(&rows));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaleRow {
    pub object: String,
    pub generators: String,
    pub order: usize,
    pub aut_order: usize,
    pub aut_group: String,
    pub lagrangian: bool,
    pub condensed_order: usize,
    pub condensed_group: String,
    pub condensed_theory: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaleReport {
    pub count: usize,
    pub algebras: Vec<EtaleRow>,
    pub notes: Vec<String>,
}

impl EtaleReport {
    pub fn build(m: &MetricGroup, notes: &[String], limits: &Limits) -> Result<Self> {
        let mut algebras = Vec::new();
        for a in enumerate_etale(m, limits)? {
            let aut = etale_aut_group(m, &a)?;
            let cond = condense(m, &a)?;
            algebras.push(EtaleRow {
                object: a.object_label(m),
                generators: a.generator_label(m),
                order: a.order(),
                aut_order: aut.order(),
                aut_group: name_group(&aut.group),
                lagrangian: a.is_lagrangian(m),
                condensed_order: cond.result.order(),
                condensed_group: cond.result.group().name(),
                condensed_theory: identify_theory(&cond.result).map(String::from),
            });
        }
        Ok(EtaleReport {
            count: algebras.len(),
            algebras,
            notes: notes.to_vec(),
        })
    }

    fn render(&self) -> String {
        let mut out = format!("{}:\n", plural(self.count, "etale algebra", "etale algebras"));
        let mut rows = vec![["algebra", "|A|", "Aut_C(A)", "Lagrangian", "C_A^loc"].map(String::from).to_vec()];
        for r in &self.algebras {
            rows.push(vec![
                r.object.clone(),
                r.order.to_string(),
                r.aut_group.clone(),
                if r.lagrangian { "yes" } else { "no" }.into(),
                match &r.condensed_theory {
                    Some(t) => t.clone(),
                    None => format!("pointed on {}", r.condensed_group),
                },
            ]);
        }
        out.push_str(&table(&rows));
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondenseReport {
    pub algebra: String,
    pub complement: Vec<String>,
    pub theory: Option<String>,
    pub group: String,
    pub labels: Vec<String>,
    pub twists: Vec<QZ>,
}

impl CondenseReport {
    pub fn build(m: &MetricGroup, a: &EtaleAlgebra) -> Result<Self> {
        let cond = condense(m, a)?;
        Ok(CondenseReport {
            algebra: a.object_label(m),
            complement: cond.complement.elements.iter().map(|&x| m.label(x)).collect(),
            theory: identify_theory(&cond.result).map(String::from),
            group: cond.result.group().name(),
            labels: labels_of(&cond.result),
            twists: cond.result.q_values().to_vec(),
        })
    }

    fn render(&self) -> String {
        let mut out = format!("condensing {}\n", self.algebra);
        let _ = writeln!(out, "B⊥ = {{{}}}", self.complement.join(", "));
        let _ = writeln!(
            out,
            "C_A^loc: {} on {}",
            self.theory.as_deref().unwrap_or("pointed theory"),
            self.group
        );
        let mut rows = vec![vec!["anyon".to_string(), "t".to_string()]];
        for (l, t) in self.labels.iter().zip(&self.twists) {
            rows.push(vec![l.clone(), t.to_string()]);
        }
        out.push_str(&table(&rows));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocycleEntry {
    pub g: String,
    pub h: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSummary {
    pub name: String,
    pub order: usize,
    /// Nonzero values of `w = ring ∘ ω` in `Aut_C(A)`.
    pub cocycle: Vec<CocycleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub algebra: String,
    pub symmetry_group: String,
    pub aut_algebra: String,
    pub aut_algebra_order: usize,
    /// `PASSED` or `FAILED`.
    pub first_obstruction: String,
    /// Symmetry element that moves the algebra.
    pub witness: Option<String>,
    pub extension: Option<ExtensionSummary>,
    pub summary: String,
}

fn first_failure_summary(action: &CategoricalAction, a: &EtaleAlgebra, g: usize) -> String {
    format!(
        "BROKEN: first obstruction FAILED ({} does not fix {})",
        action.group().element_label(g),
        a.generator_label(action.metric())
    )
}

impl ObstructionReport {
    pub fn build(action: &CategoricalAction, a: &EtaleAlgebra) -> Result<Self> {
        let m = action.metric();
        let aut = etale_aut_group(m, a)?;
        let grp = action.group();
        let base = ObstructionReport {
            algebra: a.object_label(m),
            symmetry_group: name_group(grp),
            aut_algebra: name_group(&aut.group),
            aut_algebra_order: aut.order(),
            first_obstruction: "PASSED".into(),
            witness: None,
            extension: None,
            summary: String::new(),
        };
        if let Some(g) = first_obstruction_witness(action, a) {
            return Ok(ObstructionReport {
                first_obstruction: "FAILED".into(),
                witness: Some(grp.element_label(g)),
                summary: first_failure_summary(action, a, g),
                ..base
            });
        }
        let ext = crate::action::obstruction_extension(action, a)?;
        let mut cocycle = Vec::new();
        for g in grp.elements() {
            for h in grp.elements() {
                let v = ext.cocycle.get(g, h);
                if v != 0 {
                    cocycle.push(CocycleEntry {
                        g: grp.element_label(g),
                        h: grp.element_label(h),
                        value: ext.kernel_label(v),
                    });
                }
            }
        }
        let name = ext.name();
        Ok(ObstructionReport {
            summary: format!("first obstruction PASSED; Aut_{{C^G}}(I(A)) ≅ {name} of order {}", ext.order()),
            extension: Some(ExtensionSummary {
                name,
                order: ext.order(),
                cocycle,
            }),
            ..base
        })
    }

    fn render(&self) -> String {
        let mut out = format!("algebra {} under {}\n", self.algebra, self.symmetry_group);
        let _ = writeln!(out, "Aut_C(A) ≅ {} (order {})", self.aut_algebra, self.aut_algebra_order);
        let _ = write!(out, "first obstruction: {}", self.first_obstruction);
        match &self.witness {
            Some(w) => {
                let _ = writeln!(out, " (witness {w})");
            }
            None => out.push('\n'),
        }
        if let Some(e) = &self.extension {
            let _ = writeln!(out, "Aut_{{C^G}}(I(A)) ≅ {} (order {})", e.name, e.order);
            if e.cocycle.is_empty() {
                out.push_str("restricted cocycle w: trivial\n");
            } else {
                for c in &e.cocycle {
                    let _ = writeln!(out, "w({}, {}) = {}", c.g, c.h, c.value);
                }
            }
        }
        let _ = writeln!(out, "{}", self.summary);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRow {
    pub elements: Vec<String>,
    pub name: String,
    pub stabilizes: bool,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingsReport {
    pub algebra: String,
    pub symmetry_group: String,
    pub first_obstruction: String,
    pub extension: Option<String>,
    pub group_elements: Vec<String>,
    pub splittings: usize,
    pub classes: usize,
    /// Each equivariant structure as `χ(g)` for `g` in `group_elements`.
    pub structures: Vec<Vec<String>>,
    /// Structure indices grouped by `Aut_C(A)`-conjugacy.
    pub structure_classes: Vec<Vec<usize>>,
    pub verdict: Verdict,
    pub summary: String,
    /// Equivariant-structure counts for every subgroup of `G`.
    pub subgroups: Vec<SubgroupRow>,
}

fn subgroup_rows(action: &CategoricalAction, a: &EtaleAlgebra, limits: &Limits) -> Result<Vec<SubgroupRow>> {
    Ok(subgroup_breakdown(action, a, limits)?
        .into_iter()
        .map(|o| SubgroupRow {
            elements: group_labels(action.group(), &o.subgroup.elements),
            name: o.name,
            stabilizes: o.stabilizes,
            count: o.structures,
        })
        .collect())
}

impl SplittingsReport {
    pub fn build(action: &CategoricalAction, a: &EtaleAlgebra, limits: &Limits) -> Result<Self> {
        let m = action.metric();
        let grp = action.group();
        let analysis = analyze(action, a, limits)?;
        let subgroups = subgroup_rows(action, a, limits)?;
        let all: Vec<usize> = grp.elements().collect();
        let mut report = SplittingsReport {
            algebra: a.object_label(m),
            symmetry_group: name_group(grp),
            first_obstruction: "PASSED".into(),
            extension: None,
            group_elements: group_labels(grp, &all),
            splittings: analysis.splittings.len(),
            classes: analysis.splitting_classes.len(),
            structures: Vec::new(),
            structure_classes: Vec::new(),
            verdict: analysis.verdict,
            summary: String::new(),
            subgroups,
        };
        match (&analysis.first_obstruction_witness, &analysis.extension, &analysis.structures) {
            (Some(g), _, _) => {
                report.first_obstruction = "FAILED".into();
                report.summary = first_failure_summary(action, a, *g);
            }
            (None, Some(ext), Some(st)) => {
                let name = ext.name();
                report.structures = st
                    .structures
                    .iter()
                    .map(|s| s.chi.iter().map(|&x| ext.kernel_label(x)).collect())
                    .collect();
                report.structure_classes = st.classes.clone();
                report.summary = if analysis.splittings.is_empty() {
                    format!("BROKEN: 0 splittings; Aut_{{C^G}}(I(A)) ≅ {name}")
                } else {
                    format!(
                        "PRESERVED: {} in {}; Aut_{{C^G}}(I(A)) ≅ {name}",
                        plural(report.splittings, "splitting", "splittings"),
                        plural(report.classes, "class", "classes")
                    )
                };
                report.extension = Some(name);
            }
            _ => return Err(Error::Internal("analysis without extension".into())),
        }
        Ok(report)
    }

    fn render(&self) -> String {
        let mut out = format!("algebra {} under {}\n", self.algebra, self.symmetry_group);
        let _ = writeln!(out, "first obstruction: {}", self.first_obstruction);
        if let Some(e) = &self.extension {
            let _ = writeln!(out, "Aut_{{C^G}}(I(A)) ≅ {e}");
            let _ = writeln!(
                out,
                "{} in {}",
                plural(self.splittings, "splitting", "splittings"),
                plural(self.classes, "class", "classes")
            );
            if !self.structures.is_empty() {
                out.push_str("equivariant structures χ:\n");
                let mut rows = vec![std::iter::once("#".to_string())
                    .chain(self.group_elements.iter().map(|g| format!("χ({g})")))
                    .collect::<Vec<_>>()];
                for (i, s) in self.structures.iter().enumerate() {
                    rows.push(std::iter::once(i.to_string()).chain(s.iter().cloned()).collect());
                }
                out.push_str(&table(&rows));
                let classes: Vec<String> = self
                    .structure_classes
                    .iter()
                    .map(|c| format!("{{{}}}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")))
                    .collect();
                let _ = writeln!(out, "classes: {}", classes.join(" "));
            }
        }
        out.push_str("subgroups H ≤ G:\n");
        let mut rows = vec![["H", "≅", "fixes A", "structures"].map(String::from).to_vec()];
        for r in &self.subgroups {
            rows.push(vec![
                format!("{{{}}}", r.elements.join(", ")),
                r.name.clone(),
                if r.stabilizes { "yes" } else { "no" }.into(),
                r.count.to_string(),
            ]);
        }
        out.push_str(&table(&rows));
        let _ = writeln!(out, "{}", self.summary);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedAction {
    /// The structure, as `χ(g)` for each element of `G`.
    pub structure: Vec<String>,
    /// For each generator of `G`, the image of every condensed anyon.
    pub isometries: Vec<GeneratorImages>,
    /// Nonzero values of the induced fractionalization class.
    pub fractionalization: Vec<CocycleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorImages {
    pub generator: String,
    pub images: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InduceReport {
    pub algebra: String,
    pub condensed_theory: Option<String>,
    pub condensed_labels: Vec<String>,
    pub actions: Vec<InducedAction>,
}

impl InduceReport {
    pub fn build(action: &CategoricalAction, a: &EtaleAlgebra, limits: &Limits) -> Result<Self> {
        let m = action.metric();
        let analysis = analyze(action, a, limits)?;
        let (Some(ext), Some(st)) = (&analysis.extension, &analysis.structures) else {
            let g = analysis.first_obstruction_witness.unwrap_or(0);
            return Err(Error::FirstObstructionFailed {
                element: action.group().element_label(g),
            });
        };
        let grp = action.group();
        let gens = symmetry_generators(action);
        let cond = condense(m, a)?;
        let mut actions = Vec::new();
        for s in &st.structures {
            let (cond2, induced) = induce_condensed_action(action, a, s)?;
            debug_assert_eq!(cond2.result, cond.result);
            let c = &cond2.result;
            let isometries = gens
                .iter()
                .map(|&g| GeneratorImages {
                    generator: grp.element_label(g),
                    images: c.group().elements().map(|x| c.label(induced.alpha(g).apply(x))).collect(),
                })
                .collect();
            let mut fractionalization = Vec::new();
            for g in grp.elements() {
                for h in grp.elements() {
                    let v = induced.omega(g, h);
                    if v != 0 {
                        fractionalization.push(CocycleEntry {
                            g: grp.element_label(g),
                            h: grp.element_label(h),
                            value: c.label(v),
                        });
                    }
                }
            }
            actions.push(InducedAction {
                structure: s.chi.iter().map(|&x| ext.kernel_label(x)).collect(),
                isometries,
                fractionalization,
            });
        }
        Ok(InduceReport {
            algebra: a.object_label(m),
            condensed_theory: identify_theory(&cond.result).map(String::from),
            condensed_labels: labels_of(&cond.result),
            actions,
        })
    }

    fn render(&self) -> String {
        let mut out = format!(
            "induced actions on C_A^loc ({}) for {}\n",
            self.condensed_theory.as_deref().unwrap_or("pointed theory"),
            self.algebra
        );
        if self.actions.is_empty() {
            out.push_str("no equivariant structures: nothing to induce\n");
        }
        for (i, act) in self.actions.iter().enumerate() {
            let _ = writeln!(out, "structure {i}: χ = ({})", act.structure.join(", "));
            for gi in &act.isometries {
                let maps: Vec<String> = self
                    .condensed_labels
                    .iter()
                    .zip(&gi.images)
                    .map(|(x, y)| format!("{x}→{y}"))
                    .collect();
                let _ = writeln!(out, "  α({}): {}", gi.generator, maps.join(", "));
            }
            if act.fractionalization.is_empty() {
                out.push_str("  ω: trivial\n");
            }
            for c in &act.fractionalization {
                let _ = writeln!(out, "  ω({}, {}) = {}", c.g, c.h, c.value);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalRow {
    pub elements: Vec<String>,
    pub name: String,
    pub splittings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckOut {
    pub holds: bool,
    pub extension: String,
    pub obstruction: String,
    pub isomorphic: bool,
    pub diagram_commutes: bool,
    pub categorical_splittings: usize,
    pub group_splittings: usize,
}

impl From<CrossCheck> for CrossCheckOut {
    fn from(c: CrossCheck) -> Self {
        CrossCheckOut {
            holds: c.holds,
            extension: c.extension_name,
            obstruction: c.obstruction_name,
            isomorphic: c.isomorphic,
            diagram_commutes: c.diagram_commutes,
            categorical_splittings: c.categorical_splittings,
            group_splittings: c.group_splittings,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalReportOut {
    pub kernel: String,
    pub extension: String,
    pub quotient: String,
    pub splittings: usize,
    pub classes: usize,
    pub verdict: Verdict,
    pub summary: String,
    pub subgroups: Vec<UniversalRow>,
    /// Present when the kernel is abelian.
    pub cross_check: Option<CrossCheckOut>,
}

impl UniversalReportOut {
    pub fn build(s: &UniversalScenario, limits: &Limits) -> Result<Self> {
        let r = analyze_universal(s, limits)?;
        let quotient = &s.extension().quotient;
        let cross_check = if s.extension().kernel.is_abelian() {
            Some(cross_check_abelian(s, limits)?.into())
        } else {
            None
        };
        let summary = if r.splittings.is_empty() {
            format!("BROKEN: 0 splittings; E ≅ {}", r.extension_name)
        } else {
            format!(
                "PRESERVED: {} in {}; E ≅ {}",
                plural(r.splittings.len(), "splitting", "splittings"),
                plural(r.classes.len(), "class", "classes"),
                r.extension_name
            )
        };
        Ok(UniversalReportOut {
            kernel: r.kernel_name,
            extension: r.extension_name,
            quotient: r.quotient_name,
            splittings: r.splittings.len(),
            classes: r.classes.len(),
            verdict: r.verdict,
            summary,
            subgroups: r
                .subgroups
                .iter()
                .map(|row| UniversalRow {
                    elements: group_labels(quotient, &row.subgroup.elements),
                    name: row.name.clone(),
                    splittings: row.splittings,
                })
                .collect(),
            cross_check,
        })
    }

    fn render(&self) -> String {
        let mut out = format!("1 → {} → {} → {} → 1\n", self.kernel, self.extension, self.quotient);
        let _ = writeln!(
            out,
            "{} in {}",
            plural(self.splittings, "splitting", "splittings"),
            plural(self.classes, "class", "classes")
        );
        out.push_str("subgroups H ≤ G:\n");
        let mut rows = vec![["H", "≅", "splittings"].map(String::from).to_vec()];
        for r in &self.subgroups {
            rows.push(vec![
                format!("{{{}}}", r.elements.join(", ")),
                r.name.clone(),
                r.splittings.to_string(),
            ]);
        }
        out.push_str(&table(&rows));
        if let Some(c) = &self.cross_check {
            let _ = writeln!(
                out,
                "cross-check with Z(Vec(N)): {} (E ≅ {}, Aut_{{C^G}}(I(A)) ≅ {}, isomorphic: {}, diagram commutes: {}, splittings {} = {})",
                if c.holds { "holds" } else { "FAILS" },
                c.extension,
                c.obstruction,
                c.isomorphic,
                c.diagram_commutes,
                c.categorical_splittings,
                c.group_splittings
            );
        }
        let _ = writeln!(out, "{}", self.summary);
        out
    }
}
