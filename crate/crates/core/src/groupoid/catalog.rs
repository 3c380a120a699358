//! Small groups, their actions up to isomorphism, and all morphisms between
//! two actions. Used for exhaustive checks.

use super::{ActionMorphism, FiniteAction, FiniteGroup, GroupoidError};

/// Every group of order at most `max_order` up to isomorphism, with a name.
///
/// # Panics
///
/// If `max_order > 7`; the list is only complete that far.
pub fn small_groups(max_order: usize) -> Vec<(&'static str, FiniteGroup)> {
    assert!(max_order <= 7, "small_groups covers orders up to 7");
    let z = |k| FiniteGroup::cyclic(k).expect("cyclic group");
    let all = vec![
        ("1", FiniteGroup::trivial()),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", FiniteGroup::product(&z(2), &z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", FiniteGroup::symmetric3()),
        ("Z7", z(7)),
    ];
    all.into_iter()
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

/// One subgroup from each conjugacy class, in the order of
/// [`FiniteGroup::subgroups`].
pub fn subgroup_classes(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for h in group.subgroups() {
        let seen = reps.iter().any(|r| {
            r.len() == h.len()
                && group
                    .elements()
                    .any(|g| group.conjugate_subgroup(g, r) == h)
        });
        if !seen {
            reps.push(h);
        }
    }
    reps
}

/// `G` acting on the left cosets `gH`, numbered by least element.
pub fn coset_action(
    group: &FiniteGroup,
    subgroup: &[usize],
) -> Result<FiniteAction, GroupoidError> {
    if !group.is_subgroup(subgroup) {
        return Err(GroupoidError::NotSubgroup);
    }
    let coset = |g: usize| {
        let mut c: Vec<usize> = subgroup.iter().map(|&h| group.mul(g, h)).collect();
        c.sort_unstable();
        c
    };
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for g in group.elements() {
        let c = coset(g);
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    let index_of = |c: &Vec<usize>| cosets.iter().position(|d| d == c).expect("coset");
    FiniteAction::from_fn(group.clone(), cosets.len(), |g, x| {
        index_of(&coset(group.mul(g, cosets[x][0])))
    })
}

/// Disjoint union of actions of one group, objects numbered in order.
pub fn disjoint_union(parts: &[FiniteAction]) -> Result<FiniteAction, GroupoidError> {
    let Some(first) = parts.first() else {
        return Err(GroupoidError::InvalidAction("empty union".into()));
    };
    let group = first.group().clone();
    if parts.iter().any(|p| p.group() != &group) {
        return Err(GroupoidError::InvalidAction(
            "parts act by different groups".into(),
        ));
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.n_objects();
            Some(o)
        })
        .collect();
    let n = offsets.last().expect("nonempty") + parts.last().expect("nonempty").n_objects();
    let act = group
        .elements()
        .map(|g| {
            parts
                .iter()
                .zip(&offsets)
                .flat_map(|(p, &o)| (0..p.n_objects()).map(move |x| o + p.act(g, x)))
                .collect()
        })
        .collect();
    FiniteAction::new(group, n, act, None)
}

/// Every action of `group` on between 1 and `max_objects` points, up to
/// isomorphism, as disjoint unions of coset actions.
pub fn actions_up_to_iso(group: &FiniteGroup, max_objects: usize) -> Vec<FiniteAction> {
    let orbits: Vec<FiniteAction> = subgroup_classes(group)
        .iter()
        .map(|h| coset_action(group, h).expect("subgroup"))
        .filter(|a| a.n_objects() <= max_objects)
        .collect();
    let mut out = Vec::new();
    // multisets of orbit types as non-decreasing index sequences
    let mut stack: Vec<(Vec<usize>, usize)> = (0..orbits.len())
        .map(|i| (vec![i], orbits[i].n_objects()))
        .collect();
    while let Some((choice, size)) = stack.pop() {
        let parts: Vec<FiniteAction> = choice.iter().map(|&i| orbits[i].clone()).collect();
        out.push((choice.clone(), disjoint_union(&parts).expect("same group")));
        let last = *choice.last().expect("nonempty");
        for (j, orbit) in orbits.iter().enumerate().skip(last) {
            if size + orbit.n_objects() <= max_objects {
                let mut next = choice.clone();
                next.push(j);
                stack.push((next, size + orbit.n_objects()));
            }
        }
    }
    out.sort_by(|a, b| {
        a.1.n_objects()
            .cmp(&b.1.n_objects())
            .then_with(|| a.0.cmp(&b.0))
    });
    out.into_iter().map(|(_, a)| a).collect()
}

/// Every equivariant pair `(λ, φ)` from `dom` to `cod`.
pub fn action_morphisms(dom: &FiniteAction, cod: &FiniteAction) -> Vec<ActionMorphism> {
    let g = dom.group();
    let mut reps: Vec<usize> = Vec::new();
    let mut covered = vec![false; dom.n_objects()];
    for x in 0..dom.n_objects() {
        if !covered[x] {
            reps.push(x);
            for a in g.elements() {
                covered[dom.act(a, x)] = true;
            }
        }
    }
    let mut out = Vec::new();
    for lambda in g.homomorphisms(cod.group()) {
        // admissible images of each representative: λ(Stab x) ⊆ Stab y
        let targets: Vec<Vec<usize>> = reps
            .iter()
            .map(|&x| {
                (0..cod.n_objects())
                    .filter(|&y| {
                        g.elements()
                            .filter(|&a| dom.act(a, x) == x)
                            .all(|a| cod.act(lambda[a], y) == y)
                    })
                    .collect()
            })
            .collect();
        if targets.iter().any(Vec::is_empty) {
            continue;
        }
        let mut pick = vec![0usize; reps.len()];
        loop {
            let mut phi = vec![usize::MAX; dom.n_objects()];
            for (i, &x) in reps.iter().enumerate() {
                let y = targets[i][pick[i]];
                for a in g.elements() {
                    phi[dom.act(a, x)] = cod.act(lambda[a], y);
                }
            }
            out.push(ActionMorphism {
                lambda: lambda.clone(),
                phi,
            });
            let mut i = 0;
            loop {
                if i == pick.len() {
                    break;
                }
                pick[i] += 1;
                if pick[i] < targets[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_list() {
        let orders: Vec<usize> = small_groups(6).iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6]);
    }

    #[test]
    fn subgroup_classes_of_s3() {
        let s3 = FiniteGroup::symmetric3();
        let sizes: Vec<usize> = subgroup_classes(&s3).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
    }

    #[test]
    fn coset_actions_are_transitive() {
        let s3 = FiniteGroup::symmetric3();
        for h in s3.subgroups() {
            let act = coset_action(&s3, &h).unwrap();
            assert_eq!(act.n_objects() * h.len(), 6);
            assert!((0..act.n_objects()).all(|x| s3.elements().any(|g| act.act(g, 0) == x)));
        }
    }

    #[test]
    fn action_counts() {
        // actions of the trivial group: one per size
        assert_eq!(actions_up_to_iso(&FiniteGroup::trivial(), 4).len(), 4);
        // Z2 on at most 3 points: sizes 1; 2, 1+1; 2+1, 1+1+1
        assert_eq!(
            actions_up_to_iso(&FiniteGroup::cyclic(2).unwrap(), 3).len(),
            5
        );
    }

    #[test]
    fn morphisms_are_valid_and_complete() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let swap = coset_action(&z2, &[0]).unwrap();
        let point = coset_action(&z2, &[0, 1]).unwrap();
        let all = action_morphisms(&swap, &point);
        // λ ∈ {trivial, identity}; φ constant
        assert_eq!(all.len(), 2);
        assert_eq!(action_morphisms(&point, &swap).len(), 2);
        let two = disjoint_union(&[swap.clone(), point.clone()]).unwrap();
        for m in action_morphisms(&two, &two) {
            m.validate(&two, &two).unwrap();
        }
        // brute force count over all maps φ
        let count = z2
            .homomorphisms(&z2)
            .iter()
            .map(|l| {
                (0..27)
                    .filter(|&code| {
                        let phi = vec![code % 3, code / 3 % 3, code / 9];
                        ActionMorphism {
                            lambda: l.clone(),
                            phi,
                        }
                        .validate(&two, &two)
                        .is_ok()
                    })
                    .count()
            })
            .sum::<usize>();
        assert_eq!(action_morphisms(&two, &two).len(), count);
    }
}
