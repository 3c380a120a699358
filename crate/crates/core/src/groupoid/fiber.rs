use std::collections::HashMap;

use super::{
    action_groupoid, is_morita, is_morita_action, ActionMorphism, FiniteAction, FiniteGroupoid,
    GroupoidError, GroupoidMorphism,
};

/// `𝒢 ×_𝒦 ℋ` with labels for its objects and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberProduct {
    pub groupoid: FiniteGroupoid,
    /// `(x, k, y)` with `k: φ(x) → ψ(y)` an arrow of `𝒦`.
    pub objects: Vec<(usize, usize, usize)>,
    /// `(g, h, s)`: the arrow `(g, h)` out of object `s`.
    pub arrows: Vec<(usize, usize, usize)>,
}

/// Objects `(x, k, y)` with `k: φ(x) → ψ(y)`; arrows `(g, h): (x, k, y) →
/// (x′, k′, y′)` with `ψ(h)∘k = k′∘φ(g)`; composition componentwise.
pub fn homotopy_fiber_product(
    g: &FiniteGroupoid,
    h: &FiniteGroupoid,
    k: &FiniteGroupoid,
    phi: &GroupoidMorphism,
    psi: &GroupoidMorphism,
) -> Result<FiberProduct, GroupoidError> {
    phi.validate(g, k)?;
    psi.validate(h, k)?;
    let mut objects = Vec::new();
    for x in g.objects() {
        for y in h.objects() {
            for a in k.hom(phi.on_objects[x], psi.on_objects[y]) {
                objects.push((x, a, y));
            }
        }
    }
    let object_index: HashMap<(usize, usize, usize), usize> =
        objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut arrows = Vec::new();
    let mut source = Vec::new();
    let mut target = Vec::new();
    for (s, &(x, kk, y)) in objects.iter().enumerate() {
        for a in g.arrows().filter(|&a| g.source(a) == x) {
            for b in h.arrows().filter(|&b| h.source(b) == y) {
                // k′ = ψ(b) ∘ k ∘ φ(a)⁻¹
                let k2 = k
                    .compose(psi.on_arrows[b], kk)
                    .and_then(|c| k.compose(c, k.inverse(phi.on_arrows[a])))
                    .expect("composable by functoriality");
                arrows.push((a, b, s));
                source.push(s);
                target.push(object_index[&(g.target(a), k2, h.target(b))]);
            }
        }
    }
    let arrow_index: HashMap<(usize, usize, usize), usize> =
        arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let unit = objects
        .iter()
        .enumerate()
        .map(|(s, &(x, _, y))| arrow_index[&(g.unit(x), h.unit(y), s)])
        .collect();
    let inverse = arrows
        .iter()
        .enumerate()
        .map(|(i, &(a, b, _))| arrow_index[&(g.inverse(a), h.inverse(b), target[i])])
        .collect();
    let compose = |second: usize, first: usize| {
        let (a2, b2, _) = arrows[second];
        let (a1, b1, s) = arrows[first];
        let a = g.compose(a2, a1).expect("composable");
        let b = h.compose(b2, b1).expect("composable");
        arrow_index[&(a, b, s)]
    };
    let groupoid = FiniteGroupoid::new(objects.len(), source, target, unit, inverse, compose)?;
    Ok(FiberProduct {
        groupoid,
        objects,
        arrows,
    })
}

/// `β/α: 𝒢 ⇢ ℋ` with apex `𝒲`, `α: 𝒲 → 𝒢` Morita and `β: 𝒲 → ℋ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub apex: FiniteGroupoid,
    pub left: FiniteGroupoid,
    pub right: FiniteGroupoid,
    pub alpha: GroupoidMorphism,
    pub beta: GroupoidMorphism,
}

impl Fraction {
    pub fn new(
        apex: FiniteGroupoid,
        left: FiniteGroupoid,
        right: FiniteGroupoid,
        alpha: GroupoidMorphism,
        beta: GroupoidMorphism,
    ) -> Result<Self, GroupoidError> {
        beta.validate(&apex, &right)?;
        if !is_morita(&apex, &left, &alpha)?.morita {
            return Err(GroupoidError::FractionLeftLegNotMorita);
        }
        Ok(Fraction {
            apex,
            left,
            right,
            alpha,
            beta,
        })
    }

    pub fn from_actions(
        apex: &FiniteAction,
        left: &FiniteAction,
        right: &FiniteAction,
        alpha: &ActionMorphism,
        beta: &ActionMorphism,
    ) -> Result<Self, GroupoidError> {
        alpha.validate(apex, left)?;
        beta.validate(apex, right)?;
        if !is_morita_action(apex, left, alpha)?.morita {
            return Err(GroupoidError::FractionLeftLegNotMorita);
        }
        Self::new(
            action_groupoid(apex),
            action_groupoid(left),
            action_groupoid(right),
            alpha.to_groupoid_morphism(apex, left),
            beta.to_groupoid_morphism(apex, right),
        )
    }
}

/// A fraction is invertible exactly when its right leg is Morita.
pub fn fraction_invertible(fr: &Fraction) -> bool {
    is_morita(&fr.apex, &fr.right, &fr.beta)
        .expect("legs validated at construction")
        .morita
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::FiniteGroup;

    fn unit_inclusion(act: &FiniteAction) -> GroupoidMorphism {
        let n = act.n_objects();
        GroupoidMorphism {
            on_objects: (0..n).collect(),
            on_arrows: (0..n)
                .map(|x| act.arrow_index(act.group().identity(), x))
                .collect(),
        }
    }

    #[test]
    fn identity_of_a_point() {
        let p = FiniteGroupoid::unit_groupoid(1);
        let id = GroupoidMorphism::identity(&p);
        let fp = homotopy_fiber_product(&p, &p, &p, &id, &id).unwrap();
        assert_eq!((fp.groupoid.n_objects(), fp.groupoid.n_arrows()), (1, 1));
    }

    #[test]
    fn fiber_of_unit_inclusion_recovers_arrows() {
        let act = FiniteAction::cyclic_shift(2, 2, 1).unwrap();
        let gpd = action_groupoid(&act);
        let m = FiniteGroupoid::unit_groupoid(2);
        let inc = unit_inclusion(&act);
        let fp = homotopy_fiber_product(&m, &m, &gpd, &inc, &inc).unwrap();
        assert_eq!(fp.groupoid.n_objects(), gpd.n_arrows());
        let mut ks: Vec<usize> = fp.objects.iter().map(|&(_, k, _)| k).collect();
        ks.sort_unstable();
        assert_eq!(ks, gpd.arrows().collect::<Vec<_>>());
        assert!(fp
            .objects
            .iter()
            .all(|&(x, k, y)| gpd.source(k) == x && gpd.target(k) == y));
    }

    #[test]
    fn disjoint_images_give_empty() {
        let two = FiniteGroupoid::unit_groupoid(2);
        let p = FiniteGroupoid::unit_groupoid(1);
        let to0 = GroupoidMorphism {
            on_objects: vec![0],
            on_arrows: vec![0],
        };
        let to1 = GroupoidMorphism {
            on_objects: vec![1],
            on_arrows: vec![1],
        };
        let fp = homotopy_fiber_product(&p, &p, &two, &to0, &to1).unwrap();
        assert_eq!((fp.groupoid.n_objects(), fp.groupoid.n_arrows()), (0, 0));
    }

    #[test]
    fn fraction_examples() {
        let z12 = FiniteAction::cyclic_shift(12, 12, 1).unwrap();
        let z4 = FiniteAction::cyclic_shift(4, 4, 1).unwrap();
        let z3 = FiniteAction::cyclic_shift(3, 3, 1).unwrap();
        let red = |m: usize| ActionMorphism {
            lambda: (0..12).map(|g| g % m).collect(),
            phi: (0..12).map(|x| x % m).collect(),
        };
        let fr = Fraction::from_actions(&z12, &z4, &z3, &red(4), &red(3)).unwrap();
        assert!(fraction_invertible(&fr));

        let id = ActionMorphism::identity(&z4);
        assert!(fraction_invertible(
            &Fraction::from_actions(&z4, &z4, &z4, &id, &id).unwrap()
        ));

        let fixed = FiniteAction::trivial(FiniteGroup::cyclic(2).unwrap(), 1);
        let point = FiniteAction::trivial(FiniteGroup::trivial(), 1);
        let id = ActionMorphism::identity(&fixed);
        let kill = ActionMorphism {
            lambda: vec![0, 0],
            phi: vec![0],
        };
        let fr = Fraction::from_actions(&fixed, &fixed, &point, &id, &kill).unwrap();
        assert!(!fraction_invertible(&fr));
        assert_eq!(
            Fraction::from_actions(&fixed, &point, &fixed, &kill, &id),
            Err(GroupoidError::FractionLeftLegNotMorita)
        );
    }
}
