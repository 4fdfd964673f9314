//! Acceptance harness. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any criterion fails.
//!
//! All comparisons are exact; the only pinned tolerance is the wall-clock
//! budget per criterion.

mod common;

use std::time::{Duration, Instant};

use condensa::action::{
    analyze, enumerate_equivariant_structures, first_obstruction, first_obstruction_witness, obstruction_extension,
    subgroup_breakdown, CategoricalAction, Verdict,
};
use condensa::cli::report::Report;
use condensa::cli::scenario::{resolve_metric, resolve_universal, ResolvedMetric};
use condensa::cli::{builtins, run, Command};
use condensa::cohomology::{enumerate_splittings, h1_classes, h2_classes, splitting_classes};
use condensa::condense::{condense, enumerate_etale, etale_aut_group, EtaleAlgebra};
use condensa::groups::{is_isomorphic, CayleyGroup, FiniteAbelianGroup, FiniteGroup};
use condensa::metric::{find_isometry, MetricGroup};
use condensa::universal::{analyze as analyze_universal, cross_check_abelian};
use condensa::{Limits, QZ};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

/// Wall-clock budget for each criterion.
const TIME_BUDGET: Duration = Duration::from_secs(10);
/// Seed for every randomized suite.
const SEED: u64 = 0x00c0_ffee_2024;
const RANDOM_SCENARIOS: usize = 200;
const RANDOM_MAX_METRIC: usize = 36;
const COBOUNDARY_SHIFTS: usize = 50;
const BOOKKEEPING_MAX_METRIC: usize = 64;
/// Largest normalized 2-cochain space scanned by the brute-force H² oracle.
const H2_ORACLE_CAP: u128 = 200_000;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn limits() -> Limits {
    Limits::default()
}

fn builtin(name: &str) -> ResolvedMetric {
    let b = builtins::find(name).unwrap_or_else(|| panic!("built-in {name}"));
    resolve_metric(&(b.scenario)(), &limits()).unwrap()
}

fn report(name: &str, cmd: Command) -> Report {
    let b = builtins::find(name).unwrap();
    run(cmd, &(b.scenario)(), &limits()).unwrap()
}

fn action_and_algebra(r: &ResolvedMetric) -> (CategoricalAction, EtaleAlgebra) {
    let a = r.algebra.clone().unwrap_or_else(|| EtaleAlgebra::trivial(&r.metric));
    (r.action.clone().unwrap(), a)
}

fn qz(s: &str) -> QZ {
    s.parse().unwrap()
}

/// Phase written as `1`, `-1`, `i` or `-i` to its exponent in `Q/Z`.
fn phase(s: &str) -> QZ {
    match s {
        "1" => QZ::ZERO,
        "i" => qz("1/4"),
        "-1" => qz("1/2"),
        "-i" => qz("3/4"),
        _ => panic!("phase {s}"),
    }
}

fn metric(factors: Vec<usize>, q: impl Fn(&[usize]) -> QZ) -> MetricGroup {
    let g = FiniteAbelianGroup::new(factors).unwrap();
    let values = g.elements().map(|x| q(&g.coords(x))).collect();
    MetricGroup::new(g, values, None).unwrap()
}

fn toric_oracle() -> MetricGroup {
    metric(vec![2, 2], |c| QZ::frac((c[0] * c[1]) as i64, 2))
}

fn double_semion_oracle() -> MetricGroup {
    metric(vec![2, 2], |c| QZ::frac(c[0] as i64, 4) - QZ::frac(c[1] as i64, 4))
}

fn zvec_z4_oracle() -> MetricGroup {
    metric(vec![4, 4], |c| QZ::frac((c[0] * c[1]) as i64, 4))
}

/// An isometry `a → b`, verified entry by entry.
fn isometric(a: &MetricGroup, b: &MetricGroup) -> bool {
    match find_isometry(a, b) {
        Some(f) => {
            let ga = a.group().to_cayley();
            let gb = b.group().to_cayley();
            is_isomorphism(&ga, &gb, &f) && a.group().elements().all(|x| a.q(x) == b.q(f.apply(x)))
        }
        None => false,
    }
}

/// An isomorphism `a → b`, verified entry by entry.
fn isomorphic<A: FiniteGroup, B: FiniteGroup>(a: &A, b: &B) -> bool {
    is_isomorphic(a, b).is_some_and(|f| is_isomorphism(a, b, &f))
}

fn cyclic_oracle(n: usize) -> CayleyGroup {
    semidirect_table(n, 1, 1)
}

fn c1_toric_modular_data() -> Outcome {
    let Report::ModularData(r) = report("toric-swap", Command::ModularData) else {
        return Err("wrong report".into());
    };
    ensure!(r.labels == ["1", "e", "m", "ε"], "labels {:?}", r.labels);
    let s_signs = [
        ["1", "1", "1", "1"],
        ["1", "1", "-1", "-1"],
        ["1", "-1", "1", "-1"],
        ["1", "-1", "-1", "1"],
    ];
    let t_diag = ["1", "1", "1", "-1"];
    ensure!(r.s_normalization == "1/2", "normalization {}", r.s_normalization);
    for (i, row) in s_signs.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            ensure!(r.s_exponents[i][j] == phase(s), "S[{i}][{j}] = {}", r.s_exponents[i][j]);
        }
    }
    let t: Vec<QZ> = t_diag.iter().map(|s| phase(s)).collect();
    ensure!(r.twists == t, "T exponents {:?}", r.twists);
    let m = builtin("toric-swap").metric;
    for x in 0..4 {
        for y in 0..4 {
            ensure!(r.s_exponents[x][y] == bilinear(&m, x, y), "S[{x}][{y}] differs from b");
        }
    }
    // S·S† = 1 with entries ±1/2.
    let sign = |q: QZ| if q.is_zero() { 1i64 } else { -1 };
    for i in 0..4 {
        for j in 0..4 {
            let dot: i64 = (0..4).map(|k| sign(r.s_exponents[i][k]) * sign(r.s_exponents[j][k])).sum();
            ensure!(dot == if i == j { 4 } else { 0 }, "S is not unitary at ({i},{j})");
        }
    }
    Ok("S = ½(±1), T = diag(1,1,1,−1)".into())
}

fn c2_toric_swap() -> Outcome {
    let Report::Splittings(r) = report("toric-swap", Command::Splittings) else {
        return Err("wrong report".into());
    };
    ensure!(r.first_obstruction == "FAILED", "first obstruction {}", r.first_obstruction);
    ensure!(r.verdict == Verdict::Broken, "verdict {}", r.verdict);
    ensure!(r.summary.contains("first obstruction FAILED"), "summary {}", r.summary);
    let (action, a) = action_and_algebra(&builtin("toric-swap"));
    let g = first_obstruction_witness(&action, &a).ok_or("no witness")?;
    let e = action.metric().find_label("e").unwrap();
    let m = action.metric().find_label("m").unwrap();
    ensure!(action.alpha(g).apply(e) == m, "witness does not send e to m");
    ensure!(!a.contains(m), "m lies in B");
    Ok(r.summary)
}

fn c3_toric_frac_m() -> Outcome {
    let (action, a) = action_and_algebra(&builtin("toric-frac-m"));
    let ext = obstruction_extension(&action, &a).map_err(|e| e.to_string())?;
    let z4 = cyclic_oracle(4);
    let w = is_isomorphic(ext.group(), &z4).ok_or("extension is not Z₄")?;
    ensure!(is_isomorphism(ext.group(), &z4, &w), "witness is not an isomorphism");
    let splittings = enumerate_splittings(&ext.extension, &limits()).map_err(|e| e.to_string())?;
    let structures = enumerate_equivariant_structures(&ext, &limits()).map_err(|e| e.to_string())?;
    ensure!(splittings.is_empty(), "{} splittings", splittings.len());
    ensure!(structures.structures.is_empty(), "{} structures", structures.structures.len());
    let Report::Splittings(r) = report("toric-frac-m", Command::Splittings) else {
        return Err("wrong report".into());
    };
    ensure!(r.verdict == Verdict::Broken && r.splittings == 0, "report {}", r.summary);
    Ok(format!("witness {:?}; {}", w.images(), r.summary))
}

fn c4_toric_frac_e() -> Outcome {
    let (action, a) = action_and_algebra(&builtin("toric-frac-e"));
    let ext = obstruction_extension(&action, &a).map_err(|e| e.to_string())?;
    ensure!(isomorphic(ext.group(), &semidirect_table(2, 2, 1)), "extension is not Z₂×Z₂");
    let splittings = enumerate_splittings(&ext.extension, &limits()).map_err(|e| e.to_string())?;
    let classes = splitting_classes(&ext.extension, &splittings);
    ensure!(splittings.len() == 2, "{} splittings", splittings.len());
    ensure!(classes.len() == 2, "{} classes", classes.len());
    let Report::Splittings(r) = report("toric-frac-e", Command::Splittings) else {
        return Err("wrong report".into());
    };
    ensure!(r.verdict == Verdict::Preserved && r.splittings == 2 && r.classes == 2, "report {}", r.summary);

    let m = builtin("zvec-z4-tables").metric;
    for (gen, target, name) in [("α²", toric_oracle(), "toric code"), ("α²m²", double_semion_oracle(), "double semion")] {
        let x = m.find_label(gen).ok_or(format!("no anyon {gen}"))?;
        let b = EtaleAlgebra::generated_by(&m, &[x]).map_err(|e| e.to_string())?;
        let cond = condense(&m, &b).map_err(|e| e.to_string())?;
        ensure!(isometric(&cond.result, &target), "⟨{gen}⟩ does not give {name}");
    }
    Ok(format!("{}; ⟨α²⟩ → toric code, ⟨α²m²⟩ → double semion", r.summary))
}

fn c5_zvec_z4_tables() -> Outcome {
    let m = builtin("zvec-z4-tables").metric;
    let rows = [
        ["1", "1", "1", "1"],
        ["1", "i", "-1", "-i"],
        ["1", "-1", "1", "-1"],
        ["1", "-i", "-1", "i"],
    ];
    let names = ["1", "α", "α²", "α³"];
    let cols = ["", "m", "m²", "m³"];
    for (a, row) in rows.iter().enumerate() {
        for (b, p) in row.iter().enumerate() {
            let label = match (a, b) {
                (0, 0) => "1".to_string(),
                (0, _) => cols[b].to_string(),
                (_, _) => format!("{}{}", names[a], cols[b]),
            };
            let x = m.find_label(&label).ok_or(format!("no anyon {label}"))?;
            ensure!(m.q(x) == phase(p), "θ({label}) = {}", m.q(x));
            ensure!(m.q(x) == QZ::frac((a * b) as i64, 4), "θ({label}) is not ab/4");
        }
    }
    ensure!(isometric(&m, &zvec_z4_oracle()), "metric is not Z(Vec(Z₄))");

    let Report::Etale(r) = report("zvec-z4-tables", Command::Etale) else {
        return Err("wrong report".into());
    };
    ensure!(r.count == 7 && r.algebras.len() == 7, "{} algebras", r.count);
    ensure!(isotropic_subgroups(&m).len() == 7, "oracle finds {} isotropic subgroups", isotropic_subgroups(&m).len());
    let mut orders: Vec<usize> = r.algebras.iter().map(|row| row.aut_order).collect();
    orders.sort_unstable();
    ensure!(orders == [1, 2, 2, 2, 4, 4, 4], "Aut orders {orders:?}");
    let flagged = r.notes.iter().filter(|n| n.starts_with("Label discrepancy")).count();
    ensure!(flagged == 2, "{flagged} discrepancy notes");
    let g = m.group();
    for printed in ["α", "m"] {
        let x = m.find_label(printed).unwrap();
        ensure!(![0, x].contains(&g.add(x, x)), "{{1, {printed}}} is closed");
    }

    // Rows of the published table; the first two order-2 rows are read as
    // 1⊕α² and 1⊕m².
    let trivial = CayleyGroup::trivial();
    let z2 = cyclic_oracle(2);
    let z4 = cyclic_oracle(4);
    let klein = semidirect_table(2, 2, 1);
    let table: [(&[&str], MetricGroup, &CayleyGroup); 7] = [
        (&[], zvec_z4_oracle(), &trivial),
        (&["α²"], toric_oracle(), &z2),
        (&["m²"], toric_oracle(), &z2),
        (&["α²m²"], double_semion_oracle(), &z2),
        (&["α"], MetricGroup::trivial(), &z4),
        (&["m"], MetricGroup::trivial(), &z4),
        (&["α²", "m²"], MetricGroup::trivial(), &klein),
    ];
    let algebras = enumerate_etale(&m, &limits()).map_err(|e| e.to_string())?;
    for (gens, theory, aut) in &table {
        let gens: Vec<usize> = gens.iter().map(|l| m.find_label(l).unwrap()).collect();
        let mut span = vec![0usize];
        while let Some(next) = span
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| g.add(x, y)))
            .find(|z| !span.contains(z))
        {
            span.push(next);
        }
        span.sort_unstable();
        let a = algebras
            .iter()
            .find(|a| a.elements() == span.as_slice())
            .ok_or(format!("no algebra on {span:?}"))?;
        let chars = etale_aut_group(&m, a).map_err(|e| e.to_string())?;
        ensure!(isomorphic(&chars.group.to_cayley(), *aut), "Aut of {} differs", a.object_label(&m));
        let cond = condense(&m, a).map_err(|e| e.to_string())?;
        ensure!(isometric(&cond.result, theory), "condensing {} differs", a.object_label(&m));
    }
    Ok("16 twists, 7 algebras, Aut orders {1,2,2,2,4,4,4}, 2 label notes".into())
}

fn c6_dic12() -> Outcome {
    let (action, a) = action_and_algebra(&builtin("dic12"));
    let ext = obstruction_extension(&action, &a).map_err(|e| e.to_string())?;
    ensure!(ext.order() == 12, "order {}", ext.order());
    ensure!(isomorphic(ext.group(), &semidirect_table(3, 4, 2)), "extension is not Z₃⋊Z₄");
    let splittings = enumerate_splittings(&ext.extension, &limits()).map_err(|e| e.to_string())?;
    ensure!(splittings.is_empty(), "{} splittings", splittings.len());
    let Report::Splittings(r) = report("dic12", Command::Splittings) else {
        return Err("wrong report".into());
    };
    ensure!(r.verdict == Verdict::Broken, "verdict {}", r.verdict);
    Ok(format!("|E| = 12 ≅ Z₃⋊Z₄; {}", r.summary))
}

fn c7_metaplectic() -> Outcome {
    let (action, a) = action_and_algebra(&builtin("metaplectic"));
    ensure!(!first_obstruction(&action, &a), "first obstruction passes");
    let chars = etale_aut_group(action.metric(), &a).map_err(|e| e.to_string())?;
    ensure!(isomorphic(&chars.group.to_cayley(), &cyclic_oracle(3)), "Aut_C(A) is not Z₃");
    let Report::Obstruction(r) = report("metaplectic", Command::Obstruction) else {
        return Err("wrong report".into());
    };
    ensure!(r.first_obstruction == "FAILED", "report {}", r.first_obstruction);
    ensure!(r.aut_algebra == "Z₃", "report Aut {}", r.aut_algebra);
    Ok(format!("{}; Aut_C(A) ≅ {}", r.summary, r.aut_algebra))
}

fn c8_s3_universal() -> Outcome {
    let b = builtins::find("s3-universal").unwrap();
    let s = resolve_universal(&(b.scenario)(), &limits()).map_err(|e| e.to_string())?;
    let ext = s.extension();
    ensure!(isomorphic(&ext.group, &s3_permutations()), "E is not S₃");
    let r = analyze_universal(&s, &limits()).map_err(|e| e.to_string())?;
    ensure!(r.splittings.len() == 3, "{} splittings", r.splittings.len());
    ensure!(r.classes.len() == 1, "{} classes", r.classes.len());
    // Sections of E → Z₂ are the involutions over the generator.
    let e = &ext.group;
    let gen = (0..ext.quotient.order()).find(|&g| g != ext.quotient.identity()).unwrap();
    let involutions =
        e.elements().filter(|&x| e.op(x, x) == e.identity() && ext.projection.apply(x) == gen).count();
    ensure!(involutions == 3, "oracle finds {involutions} sections");
    let c = cross_check_abelian(&s, &limits()).map_err(|e| e.to_string())?;
    ensure!(c.holds && c.isomorphic, "cross-check fails");
    ensure!(c.extension_name == "S₃" && c.obstruction_name == "S₃", "{} vs {}", c.extension_name, c.obstruction_name);
    Ok(format!("3 splittings in 1 class; {} ≅ {}", c.extension_name, c.obstruction_name))
}

fn c9_landau() -> Outcome {
    let m = MetricGroup::trivial();
    let a = EtaleAlgebra::trivial(&m);
    let mut total = 0;
    for (name, g, subgroups) in [
        ("Z₂", cyclic_oracle(2), 2),
        ("Z₄", cyclic_oracle(4), 3),
        ("S₃", s3_permutations(), 6),
    ] {
        let action = CategoricalAction::trivial(m.clone(), g);
        let rows = subgroup_breakdown(&action, &a, &limits()).map_err(|e| e.to_string())?;
        ensure!(rows.len() == subgroups, "{name}: {} subgroups", rows.len());
        for row in &rows {
            ensure!(row.stabilizes && row.structures == 1, "{name}: {} has {} structures", row.name, row.structures);
        }
        total += rows.len();
    }
    let Report::Splittings(r) = report("landau", Command::Splittings) else {
        return Err("wrong report".into());
    };
    ensure!(r.subgroups.iter().all(|s| s.count == 1), "landau built-in");
    Ok(format!("{total} subgroups, one structure each"))
}

fn c10a_bookkeeping() -> Outcome {
    let groups = all_metric_groups(BOOKKEEPING_MAX_METRIC);
    let mut checked = 0usize;
    for (name, m) in &groups {
        let algebras = enumerate_etale(m, &limits()).map_err(|e| format!("{name}: {e}"))?;
        let oracle = isotropic_subgroups(m);
        ensure!(algebras.len() == oracle.len(), "{name}: {} algebras, oracle {}", algebras.len(), oracle.len());
        let n = m.order();
        for a in &algebras {
            let mask = a.elements().iter().fold(0u128, |acc, &x| acc | 1 << x);
            ensure!(oracle.contains(&mask), "{name}: {:?} is not an oracle subgroup", a.elements());
            let perp: Vec<usize> =
                (0..n).filter(|&x| a.elements().iter().all(|&y| bilinear(m, x, y).is_zero())).collect();
            let b = a.order();
            let cond = condense(m, a).map_err(|e| format!("{name}: {e}"))?;
            let r = &cond.result;
            ensure!(n % (b * b) == 0 && r.order() == n / (b * b), "{name}: |B⊥/B| = {} for |B| = {b}", r.order());
            ensure!(perp.len() == b * r.order(), "{name}: |B⊥| = {}", perp.len());
            for &x in &perp {
                ensure!(r.q(cond.projection[&x]) == m.q(x), "{name}: induced form differs at {x}");
            }
            for x in 1..r.order() {
                ensure!((0..r.order()).any(|y| !bilinear(r, x, y).is_zero()), "{name}: {x} is transparent in B⊥/B");
            }
            checked += 1;
        }
    }
    Ok(format!("{} metric groups, {checked} isotropic subgroups", groups.len()))
}

fn c10b_bijection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut sampler = ScenarioSampler::new(RANDOM_MAX_METRIC);
    let (mut preserved, mut nontrivial) = (0, 0);
    for i in 0..RANDOM_SCENARIOS {
        let s = sampler.sample(&mut rng);
        let ext = obstruction_extension(&s.action, &s.algebra).map_err(|e| format!("#{i} {}: {e}", s.description))?;
        let splittings = enumerate_splittings(&ext.extension, &limits()).map_err(|e| e.to_string())?;
        let structures = enumerate_equivariant_structures(&ext, &limits()).map_err(|e| e.to_string())?;
        ensure!(
            splittings.len() == structures.structures.len(),
            "#{i} {}: {} splittings, {} structures",
            s.description,
            splittings.len(),
            structures.structures.len()
        );
        preserved += usize::from(!splittings.is_empty());
        nontrivial += usize::from(s.algebra.order() > 1 && s.action.group().order() > 1);
    }
    Ok(format!(
        "{RANDOM_SCENARIOS} scenarios ({preserved} preserved, {nontrivial} with nontrivial B and G)"
    ))
}

fn c10c_coboundary_shift() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xc);
    let mut sampler = ScenarioSampler::new(RANDOM_MAX_METRIC);
    let fixed = ["toric-frac-m", "toric-frac-e", "dic12"];
    for i in 0..COBOUNDARY_SHIFTS {
        let (desc, action, a) = if i % 2 == 0 {
            let name = fixed[(i / 2) % fixed.len()];
            let (action, a) = action_and_algebra(&builtin(name));
            (name.to_string(), action, a)
        } else {
            let s = sampler.sample(&mut rng);
            (s.description, s.action, s.algebra)
        };
        let g = action.group();
        let n_m = action.metric().order();
        let f: Vec<usize> =
            g.elements().map(|x| if x == g.identity() { 0 } else { rng.gen_range(0..n_m) }).collect();
        let moved = shifted(&action, &f);
        let before = obstruction_extension(&action, &a).map_err(|e| e.to_string())?;
        let after = obstruction_extension(&moved, &a).map_err(|e| e.to_string())?;
        ensure!(isomorphic(before.group(), after.group()), "#{i} {desc}: extension changed under shift {f:?}");
        let s0 = enumerate_splittings(&before.extension, &limits()).map_err(|e| e.to_string())?.len();
        let s1 = enumerate_splittings(&after.extension, &limits()).map_err(|e| e.to_string())?.len();
        ensure!(s0 == s1, "#{i} {desc}: {s0} splittings became {s1}");
    }
    Ok(format!("{COBOUNDARY_SHIFTS} shifts"))
}

fn c10d_cohomology_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xd);
    let mut sampler = ScenarioSampler::new(RANDOM_MAX_METRIC);
    let mut cases: Vec<(String, CategoricalAction, EtaleAlgebra)> = ["toric-frac-m", "toric-frac-e", "dic12", "landau"]
        .iter()
        .map(|name| {
            let (action, a) = action_and_algebra(&builtin(name));
            (name.to_string(), action, a)
        })
        .collect();
    for _ in 0..RANDOM_SCENARIOS {
        let s = sampler.sample(&mut rng);
        cases.push((s.description, s.action, s.algebra));
    }
    let (mut split, mut h2_checked) = (0, 0);
    for (desc, action, a) in &cases {
        let analysis = analyze(action, a, &limits()).map_err(|e| format!("{desc}: {e}"))?;
        let ext = analysis.extension.as_ref().ok_or(format!("{desc}: first obstruction fails"))?;
        let cm = &ext.coeffs;
        let w = ext.cocycle.table();
        let splits = brute_is_coboundary(cm, &w);
        ensure!(splits == !analysis.splittings.is_empty(), "{desc}: oracle says split = {splits}");
        if splits {
            let (z1, b1) = brute_h1(cm);
            ensure!(analysis.splittings.len() == z1, "{desc}: {} splittings, |Z¹| = {z1}", analysis.splittings.len());
            ensure!(
                analysis.splitting_classes.len() == z1 / b1,
                "{desc}: {} classes, |H¹| = {}",
                analysis.splitting_classes.len(),
                z1 / b1
            );
            let h1 = h1_classes(cm, &limits()).map_err(|e| e.to_string())?;
            ensure!(h1.len() == z1 / b1, "{desc}: h1_classes {} vs oracle {}", h1.len(), z1 / b1);
            split += 1;
        }
        if two_cochain_space(cm) <= H2_ORACLE_CAP {
            let h2 = h2_classes(cm, &limits()).map_err(|e| e.to_string())?;
            let oracle = brute_h2_order(cm);
            ensure!(h2.len() == oracle, "{desc}: h2_classes {} vs oracle {oracle}", h2.len());
            h2_checked += 1;
        }
    }
    Ok(format!("{} cases, {split} split, {h2_checked} H² comparisons", cases.len()))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 13] = [
        ("1", "toric code S and T", c1_toric_modular_data),
        ("2", "toric-swap first obstruction", c2_toric_swap),
        ("3", "toric-frac-m extension Z₄, broken", c3_toric_frac_m),
        ("4", "toric-frac-e extension Z₂×Z₂, condensations", c4_toric_frac_e),
        ("5", "Z(Vec(Z₄)) twists and etale algebras", c5_zvec_z4_tables),
        ("6", "Dic₁₂ extension, broken", c6_dic12),
        ("7", "metaplectic first obstruction", c7_metaplectic),
        ("8", "S₃ universal example", c8_s3_universal),
        ("9", "Landau suite", c9_landau),
        ("10a", "condensation bookkeeping, |M| ≤ 64", c10a_bookkeeping),
        ("10b", "splittings = equivariant structures", c10b_bijection),
        ("10c", "coboundary-shift invariance", c10c_coboundary_shift),
        ("10d", "H¹/H² brute-force oracles", c10d_cohomology_oracles),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > TIME_BUDGET => Err(format!("{detail}; over the {TIME_BUDGET:?} budget")),
            r => r,
        };
        match result {
            Ok(detail) => println!("PASS {id:>3}  {title}: {detail} [{:.2} s]", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>3}  {title}: {why} [{:.2} s]", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
