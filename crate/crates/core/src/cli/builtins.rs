//! The built-in example scenarios.

use super::scenario::{
    AlgebraSpec, AnyonRef, ElementRef, ExtensionSpec, GroupSpec, MetricSpec, OmegaEntry, Scenario, SymmetrySpec,
};
use super::Command;
use crate::groups::superscript;
use crate::qz::QZ;

pub struct Builtin {
    pub name: &'static str,
    pub commands: &'static [Command],
    pub scenario: fn() -> Scenario,
}

pub const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "toric-swap",
        commands: &[Command::ModularData, Command::Etale, Command::Obstruction],
        scenario: toric_swap,
    },
    Builtin {
        name: "toric-frac-m",
        commands: &[Command::Obstruction, Command::Splittings],
        scenario: toric_frac_m,
    },
    Builtin {
        name: "toric-frac-e",
        commands: &[Command::Obstruction, Command::Splittings, Command::Induce],
        scenario: toric_frac_e,
    },
    Builtin {
        name: "zvec-z4-tables",
        commands: &[Command::ModularData, Command::Etale],
        scenario: zvec_z4_tables,
    },
    Builtin {
        name: "dic12",
        commands: &[Command::Obstruction, Command::Splittings],
        scenario: dic12,
    },
    Builtin {
        name: "metaplectic",
        commands: &[Command::Etale, Command::Obstruction],
        scenario: metaplectic,
    },
    Builtin {
        name: "s3-universal",
        commands: &[Command::Universal],
        scenario: s3_universal,
    },
    Builtin {
        name: "landau",
        commands: &[Command::Obstruction, Command::Splittings],
        scenario: landau,
    },
];

pub fn find(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}

fn label(s: &str) -> AnyonRef {
    AnyonRef::Label(s.to_string())
}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn el(s: &str) -> ElementRef {
    ElementRef::Label(s.to_string())
}

/// `x^k` with a superscript exponent; empty for `k = 0`.
fn power(x: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => x.to_string(),
        _ => format!("{x}{}", superscript(k)),
    }
}

/// Labels `x^i y^j` for `Z_n × Z_n` in index order, identity `1`.
fn monomials(n: usize, x: &str, y: &str) -> Vec<String> {
    (0..n * n)
        .map(|i| {
            let s = format!("{}{}", power(x, i / n), power(y, i % n));
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect()
}

fn cyclic_labels(n: usize, x: &str) -> Vec<String> {
    (0..n).map(|k| if k == 0 { "1".into() } else { power(x, k) }).collect()
}

fn toric() -> MetricSpec {
    MetricSpec::double(vec![2]).labelled(labels(&["1", "e", "m", "ε"]))
}

fn z2() -> GroupSpec {
    GroupSpec::table(vec![vec![0, 1], vec![1, 0]], Some(labels(&["e", "g"])))
}

fn algebra(gens: &[&str]) -> Option<AlgebraSpec> {
    Some(AlgebraSpec {
        generators: gens.iter().map(|g| label(g)).collect(),
    })
}

fn z2_symmetry(isometry: Option<&[&str]>, omega_gg: Option<&str>) -> Option<SymmetrySpec> {
    Some(SymmetrySpec {
        group: z2(),
        generators: vec![el("g")],
        isometries: isometry.map(|xs| vec![xs.iter().map(|x| label(x)).collect()]).unwrap_or_default(),
        fractionalization: omega_gg
            .map(|v| {
                vec![OmegaEntry {
                    g: el("g"),
                    h: el("g"),
                    value: label(v),
                }]
            })
            .unwrap_or_default(),
    })
}

fn toric_swap() -> Scenario {
    Scenario {
        notes: vec!["The coordinate generators of Z(Vec(Z₂)) are m (flux) then e (charge).".into()],
        algebra: algebra(&["e"]),
        symmetry: z2_symmetry(Some(&["e", "m"]), None),
        ..Scenario::metric("Toric code with the e-m duality symmetry and the algebra 1⊕e", toric())
    }
}

fn toric_frac_m() -> Scenario {
    Scenario {
        algebra: algebra(&["e"]),
        symmetry: z2_symmetry(None, Some("m")),
        ..Scenario::metric(
            "Toric code, Z₂ permuting no anyons with ω(g,g) = m; condensing 1⊕e",
            toric(),
        )
    }
}

fn toric_frac_e() -> Scenario {
    Scenario {
        algebra: algebra(&["e"]),
        symmetry: z2_symmetry(None, Some("e")),
        ..Scenario::metric(
            "Toric code, Z₂ permuting no anyons with ω(g,g) = e; condensing 1⊕e",
            toric(),
        )
    }
}

fn zvec_z4_tables() -> Scenario {
    Scenario {
        notes: vec![
            "Anyon α^a m^b is the flux a with charge b, twist ab/4.".into(),
            "Label discrepancy: the row written 1⊕α is reported as 1⊕α², since {1, α} is not closed under fusion (α has order 4).".into(),
            "Label discrepancy: the row written 1⊕m is reported as 1⊕m², since {1, m} is not closed under fusion (m has order 4).".into(),
            "The order-2 algebras are 1⊕α², 1⊕m² and 1⊕α²m².".into(),
        ],
        algebra: algebra(&["α²"]),
        ..Scenario::metric(
            "Z(Vec(Z₄)): twists, etale algebras and their condensations",
            MetricSpec::double(vec![4]).labelled(monomials(4, "α", "m")),
        )
    }
}

fn dic12() -> Scenario {
    let metric = MetricSpec::product(vec![
        MetricSpec::double(vec![3]).labelled(monomials(3, "m₃", "e₃")),
        toric(),
    ]);
    Scenario {
        notes: vec!["Coordinates are (m₃, e₃, m, e); the Lagrangian algebra is generated by e₃ and e.".into()],
        algebra: algebra(&["e₃", "e"]),
        symmetry: z2_symmetry(Some(&["m₃²", "e₃²", "m", "e"]), Some("m")),
        ..Scenario::metric(
            "Z(Vec(Z₃)) ⊠ toric code with Z₂ charge conjugation on the Z₃ part, ω(g,g) = m; condensing the Z₆ of charges",
            metric,
        )
    }
}

fn metaplectic() -> Scenario {
    let metric = MetricSpec::product(vec![
        MetricSpec::cyclic(3, QZ::frac(1, 3)).labelled(cyclic_labels(3, "a")),
        MetricSpec::cyclic(3, QZ::frac(-1, 3)).labelled(cyclic_labels(3, "b")),
    ]);
    Scenario {
        notes: vec![
            "The algebra 1⊕ab²⊕a²b is not fixed by a ↦ a², so the first obstruction fails; Aut_C(A) ≅ Z₃.".into(),
        ],
        algebra: algebra(&["ab²"]),
        symmetry: z2_symmetry(Some(&["a²", "b"]), None),
        ..Scenario::metric(
            "Pointed part Vec(Z₃, x²/3) ⊠ Vec(Z₃, −y²/3) of the metaplectic theory with Z₂ charge conjugation on the first factor; condensing ⊕ g⊠g⁻¹",
            metric,
        )
    }
}

fn s3_universal() -> Scenario {
    Scenario {
        notes: vec!["Element 2 of S₃ is a rotation of order 3.".into()],
        ..Scenario::universal(
            "The extension 1 → Z₃ → S₃ → Z₂ → 1 as an obstruction sequence",
            ExtensionSpec {
                total: GroupSpec::named("S3"),
                normal_generators: Some(vec![ElementRef::Index(2)]),
                kernel: None,
                quotient: None,
                inclusion: None,
                projection: None,
            },
        )
    }
}

fn landau() -> Scenario {
    Scenario {
        symmetry: Some(SymmetrySpec {
            group: GroupSpec::named("S3"),
            generators: vec![],
            isometries: vec![],
            fractionalization: vec![],
        }),
        ..Scenario::metric(
            "Trivial topological order with an S₃ symmetry: every subgroup is preserved",
            MetricSpec::trivial(),
        )
    }
}
