//! The universal example: an arbitrary extension `1 → N → E → G → 1` read
//! as the obstruction sequence of `Z(Vec(N))` with the charge algebra.

use crate::action::{analyze as analyze_action, CategoricalAction, Verdict};
use crate::cohomology::{enumerate_splittings, splitting_classes, ExtensionPresentation, SplittingMap};
use crate::condense::EtaleAlgebra;
use crate::error::{Error, Limits, Result};
use crate::groups::library::name_group;
use crate::groups::{
    decompose_abelian, enumerate_subgroups_of, is_isomorphic, span, CayleyGroup, FiniteGroup, GroupHom,
    Subgroup,
};
use crate::metric::drinfeld_double_abelian;
use crate::qz::QZ;

/// An extension together with a fixed set-theoretic lift `G → E`: the least
/// preimage of each `g`, with `lift(e) = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalScenario {
    ext: ExtensionPresentation,
    lift: Vec<usize>,
    /// `E` element -> kernel element, where defined.
    unembed: Vec<Option<usize>>,
}

impl UniversalScenario {
    pub fn new(ext: ExtensionPresentation) -> Result<Self> {
        let (e, g) = (&ext.group, &ext.quotient);
        let mut lift = vec![usize::MAX; g.order()];
        for x in e.elements() {
            let p = ext.projection.apply(x);
            if lift[p] == usize::MAX {
                lift[p] = x;
            }
        }
        lift[g.identity()] = e.identity();
        let mut unembed = vec![None; e.order()];
        for n in ext.kernel.elements() {
            unembed[ext.inclusion.apply(n)] = Some(n);
        }
        for (h, &l) in lift.iter().enumerate() {
            // lift(h)·ι(N) must be exactly the fiber over h.
            let mut coset: Vec<usize> = ext
                .kernel
                .elements()
                .map(|n| e.op(l, ext.inclusion.apply(n)))
                .collect();
            coset.sort_unstable();
            let fiber: Vec<usize> = e.elements().filter(|&x| ext.projection.apply(x) == h).collect();
            if coset != fiber {
                return Err(Error::Internal("lift coset does not match its fiber".into()));
            }
        }
        Ok(UniversalScenario { ext, lift, unembed })
    }

    /// `N = ⟨normal_generators⟩ ⊴ E` and `G = E/N` on cosets ordered by
    /// their least element.
    pub fn from_total(e: CayleyGroup, normal_generators: &[usize]) -> Result<Self> {
        if let Some(&bad) = normal_generators.iter().find(|&&x| x >= e.order()) {
            return Err(Error::Invalid(format!("element {bad} out of range")));
        }
        let n_elems = span(&e, normal_generators);
        for x in e.elements() {
            for &n in &n_elems {
                if n_elems.binary_search(&e.conjugate(x, n)).is_err() {
                    return Err(Error::InvalidGroup(format!(
                        "subgroup is not normal: {} conjugates {} outside it",
                        e.element_label(x),
                        e.element_label(n)
                    )));
                }
            }
        }
        let (kernel, embed) = e.subgroup(&n_elems)?;
        let mut coset_of = vec![usize::MAX; e.order()];
        let mut reps = Vec::new();
        for x in e.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &n in &n_elems {
                coset_of[e.op(x, n)] = reps.len();
            }
            reps.push(x);
        }
        let table = (0..reps.len())
            .map(|i| (0..reps.len()).map(|j| coset_of[e.op(reps[i], reps[j])]).collect())
            .collect();
        let labels = reps.iter().map(|&r| format!("[{}]", e.element_label(r))).collect();
        let quotient = CayleyGroup::from_table(table, Some(labels))?;
        let inclusion = GroupHom::new(&kernel, &e, embed)?;
        let projection = GroupHom::new(&e, &quotient, coset_of)?;
        Self::new(ExtensionPresentation::new(kernel, quotient, e, inclusion, projection)?)
    }

    pub fn extension(&self) -> &ExtensionPresentation {
        &self.ext
    }

    pub fn lift(&self, g: usize) -> usize {
        self.lift[g]
    }

    /// `f(g,h) = lift(g)·lift(h)·lift(gh)⁻¹` as a kernel element.
    pub fn factor_set(&self, g: usize, h: usize) -> usize {
        let e = &self.ext.group;
        let gh = self.ext.quotient.op(g, h);
        let x = e.op(e.op(self.lift[g], self.lift[h]), e.inverse(self.lift[gh]));
        self.unembed[x].expect("factor set lies in the kernel")
    }

    /// Conjugation `n ↦ lift(g)·n·lift(g)⁻¹` on the kernel.
    pub fn conjugation(&self, g: usize) -> Vec<usize> {
        let e = &self.ext.group;
        self.ext
            .kernel
            .elements()
            .map(|n| {
                let x = e.conjugate(self.lift[g], self.ext.inclusion.apply(n));
                self.unembed[x].expect("kernel is normal")
            })
            .collect()
    }
}

/// Restricted splitting count over one subgroup `H ≤ G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalSubgroupRow {
    pub subgroup: Subgroup,
    pub name: String,
    pub splittings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalReport {
    pub kernel_name: String,
    pub extension_name: String,
    pub quotient_name: String,
    pub splittings: Vec<SplittingMap>,
    pub classes: Vec<Vec<usize>>,
    pub verdict: Verdict,
    pub subgroups: Vec<UniversalSubgroupRow>,
}

/// The restricted extension `1 → N → π⁻¹(H) → H → 1`.
pub fn restrict_extension(ext: &ExtensionPresentation, h: &Subgroup) -> Result<ExtensionPresentation> {
    let fiber: Vec<usize> = ext
        .group
        .elements()
        .filter(|&x| h.contains(ext.projection.apply(x)))
        .collect();
    let (eh, embed) = ext.group.subgroup(&fiber)?;
    let (hg, h_embed) = ext.quotient.subgroup(&h.elements)?;
    let pos_e = |x: usize| embed.binary_search(&x).expect("kernel lies in the fiber");
    let inclusion = GroupHom::new(
        &ext.kernel,
        &eh,
        ext.kernel.elements().map(|n| pos_e(ext.inclusion.apply(n))).collect(),
    )?;
    let projection = GroupHom::new(
        &eh,
        &hg,
        embed
            .iter()
            .map(|&x| h_embed.binary_search(&ext.projection.apply(x)).expect("fiber projects into H"))
            .collect(),
    )?;
    ExtensionPresentation::new(ext.kernel.clone(), hg, eh, inclusion, projection)
}

pub fn analyze(s: &UniversalScenario, limits: &Limits) -> Result<UniversalReport> {
    let ext = &s.ext;
    limits.check_group("extension group", ext.group.order())?;
    let splittings = enumerate_splittings(ext, limits)?;
    let classes = splitting_classes(ext, &splittings);
    let mut subgroups = Vec::new();
    for h in enumerate_subgroups_of(&ext.quotient, limits)? {
        let restricted = restrict_extension(ext, &h)?;
        let count = enumerate_splittings(&restricted, limits)?.len();
        subgroups.push(UniversalSubgroupRow {
            name: name_group(&restricted.quotient),
            subgroup: h,
            splittings: count,
        });
    }
    let verdict = if splittings.is_empty() {
        Verdict::Broken
    } else {
        Verdict::Preserved
    };
    Ok(UniversalReport {
        kernel_name: name_group(&ext.kernel),
        extension_name: name_group(&ext.group),
        quotient_name: name_group(&ext.quotient),
        splittings,
        classes,
        verdict,
        subgroups,
    })
}

/// Outcome of comparing the categorical obstruction sequence with the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub holds: bool,
    pub extension_name: String,
    pub obstruction_name: String,
    /// `is_isomorphic` found a witness.
    pub isomorphic: bool,
    /// `(χ, g) ↦ ι(n_χ)·lift(g)` is an isomorphism compatible with `ι` and `π`.
    pub diagram_commutes: bool,
    pub categorical_splittings: usize,
    pub group_splittings: usize,
}

/// Builds `C = Z(Vec(N))`, the charge algebra and the categorical action
/// induced by the extension, then compares `Aut_{C^G}(I(A))` with `E`.
pub fn cross_check_abelian(s: &UniversalScenario, limits: &Limits) -> Result<CrossCheck> {
    let ext = &s.ext;
    let kernel = &ext.kernel;
    if !kernel.is_abelian() {
        return Err(Error::Invalid("cross-check requires an abelian kernel".into()));
    }
    let all: Vec<usize> = kernel.elements().collect();
    let dec = decompose_abelian(kernel, &all)?;
    let nab = &dec.group;
    let size = nab.order();
    let double = drinfeld_double_abelian(nab, limits)?;
    let pairing = |a: usize, chi: usize| -> QZ {
        nab.coords(a)
            .iter()
            .zip(nab.coords(chi))
            .zip(nab.factors())
            .map(|((&x, y), &d)| QZ::frac((x * y) as i64, d as i64))
            .sum()
    };
    let grp = &ext.quotient;
    let conj_ab: Vec<Vec<usize>> = grp
        .elements()
        .map(|g| {
            let c = s.conjugation(g);
            nab.elements()
                .map(|a| dec.project(c[dec.embed[a]]).expect("abelian coordinates"))
                .collect()
        })
        .collect();
    let mut alpha = Vec::with_capacity(grp.order());
    for g in grp.elements() {
        let c = &conj_ab[g];
        let c_inv = &conj_ab[grp.inverse(g)];
        // Charges transform contragrediently: ⟨x, χ'⟩ = ⟨c⁻¹x, χ⟩.
        let dual: Vec<usize> = nab
            .elements()
            .map(|chi| {
                let coords: Vec<usize> = (0..nab.rank())
                    .map(|i| {
                        let v = pairing(c_inv[nab.unit(i)], chi);
                        (v.numerator() * nab.factors()[i] as i64 / v.denominator()) as usize
                    })
                    .collect();
                nab.index_unchecked(&coords)
            })
            .collect();
        let images = double
            .group()
            .elements()
            .map(|x| c[x / size] * size + dual[x % size])
            .collect();
        alpha.push(GroupHom::new(double.group(), double.group(), images)?);
    }
    let omega = grp
        .elements()
        .map(|g| {
            grp.elements()
                .map(|h| dec.project(s.factor_set(g, h)).expect("abelian coordinates") * size)
                .collect()
        })
        .collect();
    let action = CategoricalAction::new(double.clone(), grp.clone(), alpha, omega)?;
    let charges: Vec<usize> = (0..size).collect();
    let algebra = EtaleAlgebra::generated_by(&double, &charges)?;
    let analysis = analyze_action(&action, &algebra, limits)?;
    let obstruction = analysis
        .extension
        .as_ref()
        .ok_or_else(|| Error::Internal("charge algebra is not stable under the induced action".into()))?;

    let isomorphic = is_isomorphic(obstruction.group(), &ext.group).is_some();

    // ξ ↦ n_ξ inverts the ring operator restricted to fluxes.
    let chars = crate::condense::etale_aut_group(&double, &algebra)?;
    let mut flux_of = vec![usize::MAX; chars.order()];
    for a in nab.elements() {
        flux_of[chars.ring(&double, a * size)] = a;
    }
    let diagram_commutes = if flux_of.contains(&usize::MAX) {
        false
    } else {
        let images: Vec<usize> = obstruction
            .group()
            .elements()
            .map(|x| {
                let (xi, g) = obstruction.unpair(x);
                let n = ext.inclusion.apply(dec.embed[flux_of[xi]]);
                ext.group.op(n, s.lift(g))
            })
            .collect();
        match GroupHom::new(obstruction.group(), &ext.group, images) {
            Ok(phi) => {
                phi.is_injective()
                    && obstruction
                        .group()
                        .elements()
                        .all(|x| ext.projection.apply(phi.apply(x)) == obstruction.unpair(x).1)
            }
            Err(_) => false,
        }
    };
    let group_splittings = enumerate_splittings(ext, limits)?.len();
    let categorical_splittings = analysis.splittings.len();
    Ok(CrossCheck {
        holds: isomorphic && diagram_commutes && group_splittings == categorical_splittings,
        extension_name: name_group(&ext.group),
        obstruction_name: obstruction.name(),
        isomorphic,
        diagram_commutes,
        categorical_splittings,
        group_splittings,
    })
}
