use serde::Serialize;

use super::{
    action_groupoid, components, partition_by, ActionMorphism, FiniteAction, FiniteGroup,
    FiniteGroupoid, GroupoidError, GroupoidMorphism,
};

/// Why a morphism fails to be Morita.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MoritaWitness {
    /// An orbit of the codomain, named by its least object, missed by the image.
    UnreachedOrbit { object: usize },
    /// Two arrows `source → target` with the same image.
    NotInjective {
        source: usize,
        target: usize,
        arrows: [usize; 2],
    },
    /// An arrow between images of `source` and `target` that is not hit.
    NotSurjective {
        source: usize,
        target: usize,
        missing: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaVerdict {
    pub essentially_surjective: bool,
    pub fully_faithful: bool,
    pub morita: bool,
    /// The first failure found, essential surjectivity checked first, then
    /// hom-sets in lexicographic order of `(source, target)`.
    pub witness: Option<MoritaWitness>,
}

/// Morita in the discrete model: the image meets every orbit of the codomain
/// and every `𝒢(x, y) → ℋ(φx, φy)` is a bijection. Isotropy isomorphism is
/// the case `x = y`; with both conditions the induced map on orbit sets is a
/// bijection (see [`orbit_map_is_bijective`]).
pub fn is_morita(
    dom: &FiniteGroupoid,
    cod: &FiniteGroupoid,
    mor: &GroupoidMorphism,
) -> Result<MoritaVerdict, GroupoidError> {
    mor.validate(dom, cod)?;
    let mut witness = None;

    let cod_orbits = cod.orbit_labels();
    let mut reached = vec![false; cod.n_objects()];
    for &y in &mor.on_objects {
        reached[cod_orbits[y]] = true;
    }
    let unreached = cod.objects().find(|&y| !reached[cod_orbits[y]]);
    let essentially_surjective = unreached.is_none();
    if let Some(object) = unreached {
        witness = Some(MoritaWitness::UnreachedOrbit { object });
    }

    let (n, m) = (dom.n_objects(), cod.n_objects());
    let mut dom_hom: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for f in dom.arrows() {
        dom_hom[dom.source(f) * n + dom.target(f)].push(f);
    }
    let mut cod_hom: Vec<Vec<usize>> = vec![Vec::new(); m * m];
    for f in cod.arrows() {
        cod_hom[cod.source(f) * m + cod.target(f)].push(f);
    }
    let mut fully_faithful = true;
    'pairs: for x in 0..n {
        for y in 0..n {
            let arrows = &dom_hom[x * n + y];
            let mut images: Vec<usize> = Vec::with_capacity(arrows.len());
            for &f in arrows {
                let img = mor.on_arrows[f];
                if let Some(i) = images.iter().position(|&a| a == img) {
                    fully_faithful = false;
                    witness.get_or_insert(MoritaWitness::NotInjective {
                        source: x,
                        target: y,
                        arrows: [arrows[i], f],
                    });
                    break 'pairs;
                }
                images.push(img);
            }
            let target_hom = &cod_hom[mor.on_objects[x] * m + mor.on_objects[y]];
            if let Some(&missing) = target_hom.iter().find(|a| !images.contains(a)) {
                fully_faithful = false;
                witness.get_or_insert(MoritaWitness::NotSurjective {
                    source: x,
                    target: y,
                    missing,
                });
                break 'pairs;
            }
        }
    }
    Ok(MoritaVerdict {
        essentially_surjective,
        fully_faithful,
        morita: essentially_surjective && fully_faithful,
        witness,
    })
}

/// [`is_morita`] on the action groupoids of an [`ActionMorphism`].
pub fn is_morita_action(
    dom: &FiniteAction,
    cod: &FiniteAction,
    mor: &ActionMorphism,
) -> Result<MoritaVerdict, GroupoidError> {
    mor.validate(dom, cod)?;
    is_morita(
        &action_groupoid(dom),
        &action_groupoid(cod),
        &mor.to_groupoid_morphism(dom, cod),
    )
}

/// The induced map on orbit sets is a bijection.
pub fn orbit_map_is_bijective(
    dom: &FiniteGroupoid,
    cod: &FiniteGroupoid,
    mor: &GroupoidMorphism,
) -> bool {
    let (od, oc) = (dom.orbit_labels(), cod.orbit_labels());
    let n_dom = od.iter().max().map_or(0, |m| m + 1);
    let n_cod = oc.iter().max().map_or(0, |m| m + 1);
    let mut image: Vec<Option<usize>> = vec![None; n_dom];
    for x in dom.objects() {
        let c = oc[mor.on_objects[x]];
        match image[od[x]] {
            None => image[od[x]] = Some(c),
            Some(prev) if prev != c => return false,
            Some(_) => {}
        }
    }
    let mut hit: Vec<usize> = image.into_iter().flatten().collect();
    hit.sort_unstable();
    hit.dedup();
    hit.len() == n_dom && n_dom == n_cod
}

/// Recovers `(λ, φ)` from a raw functor between action groupoids.
///
/// The group component of `raw(g, x)` must not change along an adjacency
/// edge of the domain (the finite stand-in for continuity). When it is
/// constant on each adjacency component but differs between components the
/// functor has no split form and `NotConnected` is returned.
pub fn split_raw_morphism(
    dom: &FiniteAction,
    cod: &FiniteAction,
    raw: &GroupoidMorphism,
) -> Result<ActionMorphism, GroupoidError> {
    raw.validate(&action_groupoid(dom), &action_groupoid(cod))?;
    let group_part = |g: usize, x: usize| cod.arrow_parts(raw.on_arrows[dom.arrow_index(g, x)]).0;
    let n = dom.n_objects();
    let edges: Vec<(usize, usize)> = match dom.adjacency() {
        Some(e) => e.to_vec(),
        None => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect(),
    };
    for &(x, y) in &edges {
        if let Some(g) = dom
            .group()
            .elements()
            .find(|&g| group_part(g, x) != group_part(g, y))
        {
            return Err(GroupoidError::MalformedMorphism(format!(
                "group component of ({g}, x) changes along the adjacency edge ({x}, {y})"
            )));
        }
    }
    let comps = dom.adjacency_components();
    let n_comps = comps.iter().max().map_or(0, |c| c + 1);
    if n == 0 {
        return Err(GroupoidError::MalformedMorphism(
            "empty domain determines no group map".into(),
        ));
    }
    if (1..n).any(|x| {
        dom.group()
            .elements()
            .any(|g| group_part(g, x) != group_part(g, 0))
    }) {
        return Err(GroupoidError::NotConnected {
            components: n_comps,
        });
    }
    let split = ActionMorphism {
        lambda: dom.group().elements().map(|g| group_part(g, 0)).collect(),
        phi: raw.on_objects.clone(),
    };
    split.validate(dom, cod)?;
    Ok(split)
}

/// `G/K ↷ M/K` with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub action: FiniteAction,
    /// `(g, x) ↦ (gK, Kx)`
    pub projection: ActionMorphism,
    pub cosets: Vec<Vec<usize>>,
    pub object_classes: Vec<Vec<usize>>,
    /// `K` acts freely on `M`; then the projection is Morita.
    pub kernel_acts_freely: bool,
}

/// Cosets ordered by least element, objects by least member of their
/// `K`-orbit; a trivial `K` returns the action unchanged.
pub fn quotient_action(act: &FiniteAction, k: &[usize]) -> Result<Quotient, GroupoidError> {
    let g = act.group();
    if !g.is_subgroup(k) {
        return Err(GroupoidError::NotSubgroup);
    }
    if !g.is_normal(k) {
        return Err(GroupoidError::NotNormal);
    }
    let coset_label: Vec<usize> = g
        .elements()
        .map(|a| {
            k.iter()
                .map(|&x| g.mul(a, x))
                .min()
                .expect("nonempty subgroup")
        })
        .collect();
    let cosets = partition_by(&coset_label);
    let coset_of = |a: usize| {
        cosets
            .iter()
            .position(|c| c.contains(&a))
            .expect("partition")
    };
    let table = cosets
        .iter()
        .map(|c| cosets.iter().map(|d| coset_of(g.mul(c[0], d[0]))).collect())
        .collect();
    let group = FiniteGroup::new(table)?;

    let n = act.n_objects();
    let object_label = components(
        n,
        k.iter()
            .flat_map(|&x| (0..n).map(move |p| (p, act.act(x, p)))),
    );
    let object_classes = partition_by(&object_label);
    let class_of = |x: usize| object_label[x];
    let quotient_table = cosets
        .iter()
        .map(|c| {
            object_classes
                .iter()
                .map(|o| class_of(act.act(c[0], o[0])))
                .collect()
        })
        .collect();
    let adjacency = act.adjacency().map(|edges| {
        edges
            .iter()
            .map(|&(a, b)| (class_of(a), class_of(b)))
            .collect()
    });
    let action = FiniteAction::new(group, object_classes.len(), quotient_table, adjacency)?;
    let projection = ActionMorphism {
        lambda: g.elements().map(coset_of).collect(),
        phi: (0..n).map(class_of).collect(),
    };
    projection
        .validate(act, &action)
        .map_err(|e| GroupoidError::InternalCheckFailed(e.to_string()))?;
    Ok(Quotient {
        action,
        projection,
        cosets,
        object_classes,
        kernel_acts_freely: act.is_free_on(k),
    })
}

/// The factorization `mor = iso ∘ π` through `G/ker λ ↷ M/ker λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub kernel: Vec<usize>,
    pub quotient: Quotient,
    /// `(λ̄, φ̄)`: the quotient action to the codomain, an isomorphism.
    pub iso: ActionMorphism,
}

/// Factors a Morita morphism as a free quotient followed by an isomorphism.
///
/// Refuses non-Morita input. When `φ` misses objects of the codomain the
/// induced map cannot be bijective and `InducedNotIsomorphism` is returned.
pub fn factor_morita(
    dom: &FiniteAction,
    cod: &FiniteAction,
    mor: &ActionMorphism,
) -> Result<Factorization, GroupoidError> {
    let verdict = is_morita_action(dom, cod, mor)?;
    if !verdict.morita {
        return Err(GroupoidError::NotMorita(Box::new(verdict)));
    }
    let kernel = dom.group().kernel(cod.group(), &mor.lambda);
    if !dom.is_free_on(&kernel) {
        return Err(GroupoidError::InternalCheckFailed(
            "kernel of a Morita morphism acts with fixed points".into(),
        ));
    }
    let quotient = quotient_action(dom, &kernel)?;
    let iso = ActionMorphism {
        lambda: quotient.cosets.iter().map(|c| mor.lambda[c[0]]).collect(),
        phi: quotient
            .object_classes
            .iter()
            .map(|o| mor.phi[o[0]])
            .collect(),
    };
    iso.validate(&quotient.action, cod)
        .map_err(|e| GroupoidError::InternalCheckFailed(format!("induced map: {e}")))?;
    if quotient.projection.then(&iso) != *mor {
        return Err(GroupoidError::InternalCheckFailed(
            "iso ∘ projection differs from the input".into(),
        ));
    }
    let bijective = |map: &[usize], size: usize| {
        let mut v = map.to_vec();
        v.sort_unstable();
        v.dedup();
        map.len() == size && v.len() == size
    };
    let lambda_bijective = bijective(&iso.lambda, cod.group().order());
    let phi_bijective = bijective(&iso.phi, cod.n_objects());
    if !(lambda_bijective && phi_bijective) {
        return Err(GroupoidError::InducedNotIsomorphism {
            lambda_bijective,
            phi_bijective,
        });
    }
    let on_arrows = iso.to_groupoid_morphism(&quotient.action, cod).on_arrows;
    if !bijective(&on_arrows, cod.group().order() * cod.n_objects()) {
        return Err(GroupoidError::InternalCheckFailed(
            "bijective parts but not bijective on arrows".into(),
        ));
    }
    Ok(Factorization {
        kernel,
        quotient,
        iso,
    })
}
