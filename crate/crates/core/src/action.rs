//! Categorical symmetry actions on pointed categories and the obstructions
//! to preserving them under condensation.

use serde::Serialize;

use crate::cohomology::{
    classes_mod_principal, enumerate_splittings, is_twisted_2cocycle, splitting_classes,
    twisted_crossed_homs, Cochain2, CoeffModule, ExtensionPresentation, SplittingMap,
};
use crate::condense::{condense, etale_aut_group, CharacterGroup, CondensedTheory, EtaleAlgebra};
use crate::error::{Error, Limits, Result};
use crate::groups::library::name_group;
use crate::groups::{enumerate_subgroups_of, generating_set, CayleyGroup, FiniteGroup, GroupHom, Subgroup};
use crate::metric::{Isometry, MetricGroup};

/// A symmetry `G` acting on `M` by isometries `α_g`, with fractionalization
/// class `ω ∈ Z²(G, M)` twisted by `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoricalAction {
    metric: MetricGroup,
    alpha: Vec<Isometry>,
    coeffs: CoeffModule,
    omega: Cochain2,
}

impl CategoricalAction {
    pub fn new(
        metric: MetricGroup,
        group: CayleyGroup,
        alpha: Vec<GroupHom>,
        omega: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let isos = alpha
            .into_iter()
            .enumerate()
            .map(|(g, map)| {
                Isometry::new(&metric, map).map_err(|e| match e {
                    Error::NotIsometry(msg) => {
                        Error::NotIsometry(format!("alpha({}): {msg}", group.element_label(g)))
                    }
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let action = isos.iter().map(|i| i.map().images().to_vec()).collect();
        let coeffs = CoeffModule::new(group, metric.group().clone(), action)?;
        let omega = Cochain2::new(&coeffs, omega)?;
        is_twisted_2cocycle(&coeffs, &omega)?;
        Ok(CategoricalAction {
            metric,
            alpha: isos,
            coeffs,
            omega,
        })
    }

    /// Extends isometries given on `generators` of `G` multiplicatively.
    pub fn from_generators(
        metric: MetricGroup,
        group: CayleyGroup,
        generators: &[usize],
        images: &[GroupHom],
        omega: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let alpha = extend_action(&metric, &group, generators, images)?;
        Self::new(metric, group, alpha, omega)
    }

    /// `α ≡ id`, `ω ≡ 0`.
    pub fn trivial(metric: MetricGroup, group: CayleyGroup) -> Self {
        let n = group.order();
        let id = GroupHom::identity_on(metric.order());
        Self::new(metric, group, vec![id; n], vec![vec![0; n]; n]).expect("trivial action is valid")
    }

    pub fn metric(&self) -> &MetricGroup {
        &self.metric
    }

    pub fn group(&self) -> &CayleyGroup {
        &self.coeffs.group
    }

    pub fn alpha(&self, g: usize) -> &Isometry {
        &self.alpha[g]
    }

    pub fn omega(&self, g: usize, h: usize) -> usize {
        self.omega.get(g, h)
    }

    pub fn omega_cochain(&self) -> &Cochain2 {
        &self.omega
    }

    pub fn coeffs(&self) -> &CoeffModule {
        &self.coeffs
    }

    /// The action of a subgroup `H ≤ G`.
    pub fn restrict(&self, h: &Subgroup) -> Result<CategoricalAction> {
        let (sub, embed) = self.group().subgroup(&h.elements)?;
        let alpha = embed.iter().map(|&g| self.alpha[g].map().clone()).collect();
        let omega = embed
            .iter()
            .map(|&g| embed.iter().map(|&k| self.omega(g, k)).collect())
            .collect();
        Self::new(self.metric.clone(), sub, alpha, omega)
    }
}

fn extend_action(
    metric: &MetricGroup,
    group: &CayleyGroup,
    generators: &[usize],
    images: &[GroupHom],
) -> Result<Vec<GroupHom>> {
    if generators.len() != images.len() {
        return Err(Error::Invalid(format!(
            "{} generators but {} isometry images",
            generators.len(),
            images.len()
        )));
    }
    let mut alpha: Vec<Option<GroupHom>> = vec![None; group.order()];
    alpha[group.identity()] = Some(GroupHom::identity_on(metric.order()));
    let mut queue = std::collections::VecDeque::from([group.identity()]);
    while let Some(g) = queue.pop_front() {
        for (&s, img) in generators.iter().zip(images) {
            let gs = group.op(g, s);
            let composed = alpha[g].as_ref().expect("visited").compose(img);
            match &alpha[gs] {
                None => {
                    alpha[gs] = Some(composed);
                    queue.push_back(gs);
                }
                Some(existing) if *existing != composed => {
                    return Err(Error::InvalidHom(format!(
                        "generator images do not define a homomorphism (conflict at {})",
                        group.element_label(gs)
                    )));
                }
                Some(_) => {}
            }
        }
    }
    alpha
        .into_iter()
        .enumerate()
        .map(|(g, a)| {
            a.ok_or_else(|| {
                Error::Invalid(format!(
                    "listed generators do not generate the group (missing {})",
                    group.element_label(g)
                ))
            })
        })
        .collect()
}

/// First symmetry element that moves `B`, if any.
pub fn first_obstruction_witness(action: &CategoricalAction, a: &EtaleAlgebra) -> Option<usize> {
    action
        .group()
        .elements()
        .find(|&g| a.elements().iter().any(|&b| !a.contains(action.alpha(g).apply(b))))
}

/// Whether every `α_g` maps `B` onto itself.
pub fn first_obstruction(action: &CategoricalAction, a: &EtaleAlgebra) -> bool {
    first_obstruction_witness(action, a).is_none()
}

fn require_first_obstruction(action: &CategoricalAction, a: &EtaleAlgebra) -> Result<()> {
    match first_obstruction_witness(action, a) {
        None => Ok(()),
        Some(g) => Err(Error::FirstObstructionFailed {
            element: action.group().element_label(g),
        }),
    }
}

/// `B̂` with `G` acting by `(g·ξ)(b) = ξ(α_g⁻¹ b)`, and `w = ring ∘ ω`.
pub fn restricted_cocycle(
    action: &CategoricalAction,
    a: &EtaleAlgebra,
) -> Result<(CharacterGroup, CoeffModule, Cochain2)> {
    require_first_obstruction(action, a)?;
    let m = action.metric();
    let chars = etale_aut_group(m, a)?;
    let grp = action.group();
    let on_chars = grp
        .elements()
        .map(|g| {
            let inv = action.alpha(grp.inverse(g));
            chars.group.elements().map(|xi| chars.pullback(xi, |b| inv.apply(b))).collect()
        })
        .collect();
    let coeffs = CoeffModule::new(grp.clone(), chars.group.clone(), on_chars)?;
    let w = grp
        .elements()
        .map(|g| grp.elements().map(|h| chars.ring(m, action.omega(g, h))).collect())
        .collect();
    let w = Cochain2::new(&coeffs, w)?;
    is_twisted_2cocycle(&coeffs, &w)
        .map_err(|e| Error::Internal(format!("ring operator did not preserve the cocycle law: {e}")))?;
    Ok((chars, coeffs, w))
}

/// `1 → B̂ → Aut_{C^G}(I(A)) → G → 1` realized on pairs `(χ, g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionExtension {
    pub coeffs: CoeffModule,
    pub cocycle: Cochain2,
    pub extension: ExtensionPresentation,
    kernel_labels: Vec<String>,
}

impl ObstructionExtension {
    /// Builds the extension from `w ∈ Z²(G, N)` directly. The associativity
    /// of the product and the cocycle law are checked independently and
    /// must agree.
    pub fn from_cocycle(coeffs: CoeffModule, cocycle: Cochain2, kernel_labels: Vec<String>) -> Result<Self> {
        let cocycle_ok = is_twisted_2cocycle(&coeffs, &cocycle);
        let built = ExtensionPresentation::from_cocycle(&coeffs, &cocycle);
        match (cocycle_ok, built) {
            (Ok(()), Ok(extension)) => Ok(ObstructionExtension {
                coeffs,
                cocycle,
                extension,
                kernel_labels,
            }),
            (Err(e), Err(_)) => Err(e),
            (Ok(()), Err(e)) | (Err(e), Ok(_)) => Err(Error::Internal(format!(
                "cocycle check and associativity check disagree: {e}"
            ))),
        }
    }

    pub fn group(&self) -> &CayleyGroup {
        &self.extension.group
    }

    pub fn order(&self) -> usize {
        self.extension.group.order()
    }

    pub fn kernel_order(&self) -> usize {
        self.coeffs.module.order()
    }

    pub fn kernel_label(&self, xi: usize) -> String {
        self.kernel_labels[xi].clone()
    }

    /// Element `(χ, g)` of the extension group.
    pub fn pair(&self, chi: usize, g: usize) -> usize {
        chi * self.coeffs.group.order() + g
    }

    pub fn unpair(&self, x: usize) -> (usize, usize) {
        let n = self.coeffs.group.order();
        (x / n, x % n)
    }

    pub fn name(&self) -> String {
        name_group(self.group())
    }
}

pub fn obstruction_extension(action: &CategoricalAction, a: &EtaleAlgebra) -> Result<ObstructionExtension> {
    let (chars, coeffs, w) = restricted_cocycle(action, a)?;
    let labels = chars.group.elements().map(|xi| chars.label(xi)).collect();
    ObstructionExtension::from_cocycle(coeffs, w, labels)
}

/// `χ: G → B̂` with `χ(e) = 0` and `χ(gh) = χ(g) + g·χ(h) + w(g,h)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EquivariantStructure {
    pub chi: Vec<usize>,
}

impl EquivariantStructure {
    pub fn new(ext: &ObstructionExtension, chi: Vec<usize>) -> Result<Self> {
        let (grp, m) = (&ext.coeffs.group, &ext.coeffs.module);
        if chi.len() != grp.order() || chi.iter().any(|&x| x >= m.order()) {
            return Err(Error::InvalidStructure("chi must map every group element into the character group".into()));
        }
        if chi[grp.identity()] != 0 {
            return Err(Error::InvalidStructure("chi(e) must be trivial".into()));
        }
        for g in grp.elements() {
            for h in grp.elements() {
                let expected = m.add(m.add(chi[g], ext.coeffs.act(g, chi[h])), ext.cocycle.get(g, h));
                if chi[grp.op(g, h)] != expected {
                    return Err(Error::InvalidStructure(format!(
                        "chi(gh) != chi(g) + g·chi(h) + w(g,h) at ({}, {})",
                        grp.element_label(g),
                        grp.element_label(h)
                    )));
                }
            }
        }
        Ok(EquivariantStructure { chi })
    }

    /// The splitting `g ↦ (χ(g), g)`.
    pub fn to_splitting(&self, ext: &ObstructionExtension) -> Result<SplittingMap> {
        let images = ext.coeffs.group.elements().map(|g| ext.pair(self.chi[g], g)).collect();
        SplittingMap::new(&ext.extension, GroupHom::from_images(images))
    }

    /// Inverse of `to_splitting`.
    pub fn from_splitting(ext: &ObstructionExtension, s: &SplittingMap) -> Result<Self> {
        let chi = ext
            .coeffs
            .group
            .elements()
            .map(|g| ext.unpair(s.apply(g)).0)
            .collect();
        Self::new(ext, chi)
    }
}

/// All equivariant structures (sorted) and their classes under `B̂`-conjugacy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantStructures {
    pub structures: Vec<EquivariantStructure>,
    /// Indices into `structures`, ordered by least member.
    pub classes: Vec<Vec<usize>>,
}

/// Solves the structure equation directly, independently of the splitting
/// search on the extension group.
pub fn enumerate_equivariant_structures(
    ext: &ObstructionExtension,
    limits: &Limits,
) -> Result<EquivariantStructures> {
    let sols = twisted_crossed_homs(&ext.coeffs, &ext.cocycle, limits)?;
    let classes = classes_mod_principal(&ext.coeffs, &sols);
    Ok(EquivariantStructures {
        structures: sols.into_iter().map(|chi| EquivariantStructure { chi }).collect(),
        classes,
    })
}

/// The action induced on `C_A^loc ≅ B⊥/B` by an equivariant structure.
pub fn induce_condensed_action(
    action: &CategoricalAction,
    a: &EtaleAlgebra,
    lambda: &EquivariantStructure,
) -> Result<(CondensedTheory, CategoricalAction)> {
    let ext = obstruction_extension(action, a)?;
    EquivariantStructure::new(&ext, lambda.chi.clone())?;
    let m = action.metric();
    let cond = condense(m, a)?;
    let grp = action.group();
    let mut alpha = Vec::with_capacity(grp.order());
    for g in grp.elements() {
        let iso = action.alpha(g);
        if cond.complement.elements.iter().any(|&x| !cond.complement.contains(iso.apply(x))) {
            return Err(Error::Internal(format!(
                "alpha({}) preserves B but not its orthogonal complement",
                grp.element_label(g)
            )));
        }
        let images = cond
            .representatives
            .iter()
            .map(|&r| cond.projection[&iso.apply(r)])
            .collect();
        alpha.push(GroupHom::new(cond.result.group(), cond.result.group(), images)?);
    }
    let mut omega = vec![vec![0; grp.order()]; grp.order()];
    for g in grp.elements() {
        for h in grp.elements() {
            let v = action.omega(g, h);
            omega[g][h] = *cond.projection.get(&v).ok_or_else(|| Error::FractionalizationDoesNotDescend {
                g: grp.element_label(g),
                h: grp.element_label(h),
                value: m.label(v),
            })?;
        }
    }
    let induced = CategoricalAction::new(cond.result.clone(), grp.clone(), alpha, omega)?;
    Ok((cond, induced))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Preserved,
    Broken,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Preserved => "PRESERVED",
            Verdict::Broken => "BROKEN",
        })
    }
}

/// Full second-level analysis of a symmetry and an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryAnalysis {
    /// Symmetry element moving `B`, when the first obstruction fails.
    pub first_obstruction_witness: Option<usize>,
    pub extension: Option<ObstructionExtension>,
    pub splittings: Vec<SplittingMap>,
    pub splitting_classes: Vec<Vec<usize>>,
    pub structures: Option<EquivariantStructures>,
    pub verdict: Verdict,
}

/// Runs both obstructions. Splittings (searched as homomorphic sections) and
/// equivariant structures (solved as cochains) are computed separately and
/// matched elementwise through `χ ↔ σ`.
pub fn analyze(action: &CategoricalAction, a: &EtaleAlgebra, limits: &Limits) -> Result<SymmetryAnalysis> {
    if let Some(g) = first_obstruction_witness(action, a) {
        return Ok(SymmetryAnalysis {
            first_obstruction_witness: Some(g),
            extension: None,
            splittings: Vec::new(),
            splitting_classes: Vec::new(),
            structures: None,
            verdict: Verdict::Broken,
        });
    }
    let ext = obstruction_extension(action, a)?;
    let splittings = enumerate_splittings(&ext.extension, limits)?;
    let classes = splitting_classes(&ext.extension, &splittings);
    let structures = enumerate_equivariant_structures(&ext, limits)?;
    check_correspondence(&ext, &splittings, &structures)?;
    if classes.len() != structures.classes.len() {
        return Err(Error::Internal(format!(
            "{} splitting classes but {} structure classes",
            classes.len(),
            structures.classes.len()
        )));
    }
    let verdict = if splittings.is_empty() {
        Verdict::Broken
    } else {
        Verdict::Preserved
    };
    Ok(SymmetryAnalysis {
        first_obstruction_witness: None,
        extension: Some(ext),
        splittings,
        splitting_classes: classes,
        structures: Some(structures),
        verdict,
    })
}

/// Checks that `χ ↦ (g ↦ (χ(g), g))` is a bijection from structures onto
/// splittings.
pub fn check_correspondence(
    ext: &ObstructionExtension,
    splittings: &[SplittingMap],
    structures: &EquivariantStructures,
) -> Result<()> {
    if splittings.len() != structures.structures.len() {
        return Err(Error::Internal(format!(
            "{} splittings but {} equivariant structures",
            splittings.len(),
            structures.structures.len()
        )));
    }
    let mut images: Vec<SplittingMap> = structures
        .structures
        .iter()
        .map(|s| s.to_splitting(ext))
        .collect::<Result<_>>()?;
    images.sort();
    let mut sorted = splittings.to_vec();
    sorted.sort();
    if images != sorted {
        return Err(Error::Internal("structures and splittings do not correspond".into()));
    }
    for s in splittings {
        EquivariantStructure::from_splitting(ext, s)?;
    }
    Ok(())
}

/// Outcome of restricting the symmetry to one subgroup `H ≤ G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupOutcome {
    pub subgroup: Subgroup,
    pub name: String,
    pub stabilizes: bool,
    pub structures: usize,
}

/// For every subgroup `H ≤ G`: whether `H` fixes `B` and how many
/// equivariant structures the restricted action has.
pub fn subgroup_breakdown(
    action: &CategoricalAction,
    a: &EtaleAlgebra,
    limits: &Limits,
) -> Result<Vec<SubgroupOutcome>> {
    let mut out = Vec::new();
    for h in enumerate_subgroups_of(action.group(), limits)? {
        let restricted = action.restrict(&h)?;
        let name = name_group(restricted.group());
        let (stabilizes, structures) = if first_obstruction(&restricted, a) {
            let ext = obstruction_extension(&restricted, a)?;
            (true, enumerate_equivariant_structures(&ext, limits)?.structures.len())
        } else {
            (false, 0)
        };
        out.push(SubgroupOutcome {
            subgroup: h,
            name,
            stabilizes,
            structures,
        });
    }
    Ok(out)
}

/// Generators of `G` in the fixed search order, for reports.
pub fn symmetry_generators(action: &CategoricalAction) -> Vec<usize> {
    generating_set(action.group())
}
