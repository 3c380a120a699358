//! Finite groupoids, action groupoids and Morita morphisms.
//!
//! This is the discrete model of Lie groupoids: manifolds are finite sets,
//! a properly discontinuous action is a free one, and normal directions are
//! zero-dimensional, so the Morita condition reduces to essential
//! surjectivity plus full faithfulness. Connectedness of a manifold is
//! replaced by an explicit adjacency relation on objects, complete unless
//! given.
//!
//! Action groupoid arrows are pairs `(g, x)` with source `x` and target `g·x`,
//! indexed `g·|M| + x`.

pub mod catalog;
mod fiber;
mod group;
mod json;
mod morita;

use std::collections::BTreeSet;

use thiserror::Error;

pub use fiber::{fraction_invertible, homotopy_fiber_product, FiberProduct, Fraction};
pub use group::FiniteGroup;
pub use json::{ActionSpec, GroupSpec, MorphismFile, MorphismSpec};
pub use morita::{
    factor_morita, is_morita, is_morita_action, orbit_map_is_bijective, quotient_action,
    split_raw_morphism, Factorization, MoritaVerdict, MoritaWitness, Quotient,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("malformed morphism: {0}")]
    MalformedMorphism(String),
    #[error("first component varies across {components} adjacency components")]
    NotConnected { components: usize },
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("morphism is not Morita")]
    NotMorita(Box<MoritaVerdict>),
    #[error("induced map is not an isomorphism (group part bijective: {lambda_bijective}, object part bijective: {phi_bijective})")]
    InducedNotIsomorphism {
        lambda_bijective: bool,
        phi_bijective: bool,
    },
    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),
    #[error("left leg of a fraction must be Morita")]
    FractionLeftLegNotMorita,
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Union-find over `n` points; returns component ids numbered by least member.
fn components(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    (0..n)
        .map(|x| {
            let r = find(&mut parent, x);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

/// Groups `0..n` by `class[x]`, classes ordered by least member.
fn partition_by(class: &[usize]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = Vec::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for (x, &c) in class.iter().enumerate() {
        match order.iter().position(|&o| o == c) {
            Some(i) => parts[i].push(x),
            None => {
                order.push(c);
                parts.push(vec![x]);
            }
        }
    }
    parts
}

/// A group acting on `0..n` with an optional adjacency relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAction {
    group: FiniteGroup,
    n_objects: usize,
    /// `act[g][x] = g·x`
    act: Vec<Vec<usize>>,
    adjacency: Option<Vec<(usize, usize)>>,
}

impl FiniteAction {
    pub fn new(
        group: FiniteGroup,
        n_objects: usize,
        act: Vec<Vec<usize>>,
        adjacency: Option<Vec<(usize, usize)>>,
    ) -> Result<Self, GroupoidError> {
        let bad = |m: String| Err(GroupoidError::InvalidAction(m));
        if act.len() != group.order() || act.iter().any(|r| r.len() != n_objects) {
            return bad(format!(
                "action table must be {}x{}",
                group.order(),
                n_objects
            ));
        }
        if act.iter().flatten().any(|&y| y >= n_objects) {
            return bad("object out of range".into());
        }
        if (0..n_objects).any(|x| act[group.identity()][x] != x) {
            return bad("identity does not act trivially".into());
        }
        for g in group.elements() {
            for h in group.elements() {
                for x in 0..n_objects {
                    if act[g][act[h][x]] != act[group.mul(g, h)][x] {
                        return bad(format!("g·(h·x) != (gh)·x for g={g}, h={h}, x={x}"));
                    }
                }
            }
        }
        if let Some(edges) = &adjacency {
            if edges.iter().any(|&(a, b)| a >= n_objects || b >= n_objects) {
                return bad("adjacency refers to unknown object".into());
            }
        }
        let adjacency = adjacency.map(|edges| {
            edges
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        });
        Ok(FiniteAction {
            group,
            n_objects,
            act,
            adjacency,
        })
    }

    /// `x ↦ f(g, x)`.
    pub fn from_fn(
        group: FiniteGroup,
        n_objects: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupoidError> {
        let act = group
            .elements()
            .map(|g| (0..n_objects).map(|x| f(g, x)).collect())
            .collect();
        Self::new(group, n_objects, act, None)
    }

    pub fn trivial(group: FiniteGroup, n_objects: usize) -> Self {
        Self::from_fn(group, n_objects, |_, x| x).expect("trivial action")
    }

    /// `ℤ_k` acting on `ℤ_n` by `g·x = x + g·step (mod n)`; needs `n | k·step`.
    pub fn cyclic_shift(k: usize, n: usize, step: usize) -> Result<Self, GroupoidError> {
        Self::from_fn(FiniteGroup::cyclic(k)?, n, |g, x| (x + g * step) % n)
    }

    pub fn with_adjacency(mut self, edges: Vec<(usize, usize)>) -> Result<Self, GroupoidError> {
        self = Self::new(self.group, self.n_objects, self.act, Some(edges))?;
        Ok(self)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g][x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.act
    }

    /// The given edges, or `None` for the complete relation.
    pub fn adjacency(&self) -> Option<&[(usize, usize)]> {
        self.adjacency.as_deref()
    }

    /// Adjacency component of each object.
    pub fn adjacency_components(&self) -> Vec<usize> {
        match &self.adjacency {
            None => vec![0; self.n_objects],
            Some(edges) => components(self.n_objects, edges.iter().copied()),
        }
    }

    pub fn is_free(&self) -> bool {
        self.is_free_on(&self.group.elements().collect::<Vec<_>>())
    }

    /// No element of `subset` other than the identity fixes a point.
    pub fn is_free_on(&self, subset: &[usize]) -> bool {
        let e = self.group.identity();
        subset
            .iter()
            .filter(|&&k| k != e)
            .all(|&k| (0..self.n_objects).all(|x| self.act[k][x] != x))
    }

    pub fn arrow_index(&self, g: usize, x: usize) -> usize {
        g * self.n_objects + x
    }

    /// `(g, x)` for an arrow index.
    pub fn arrow_parts(&self, arrow: usize) -> (usize, usize) {
        (arrow / self.n_objects, arrow % self.n_objects)
    }
}

/// A finite groupoid with explicit arrow list and composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    n_objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    unit: Vec<usize>,
    inverse: Vec<usize>,
    /// `compose[g][f] = g ∘ f` when `target(f) = source(g)`.
    compose: Vec<Vec<Option<usize>>>,
}

impl FiniteGroupoid {
    /// Builds and checks a groupoid from its structure maps. `compose(g, f)`
    /// is only called for composable pairs.
    pub fn new(
        n_objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        inverse: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupoidError> {
        let bad = |m: String| Err(GroupoidError::InvalidGroupoid(m));
        let n_arrows = source.len();
        if target.len() != n_arrows || inverse.len() != n_arrows || unit.len() != n_objects {
            return bad("structure maps have inconsistent sizes".into());
        }
        if source.iter().chain(&target).any(|&x| x >= n_objects)
            || unit.iter().chain(&inverse).any(|&a| a >= n_arrows)
        {
            return bad("index out of range".into());
        }
        let table: Vec<Vec<Option<usize>>> = (0..n_arrows)
            .map(|g| {
                (0..n_arrows)
                    .map(|f| (target[f] == source[g]).then(|| compose(g, f)))
                    .collect()
            })
            .collect();
        let gpd = FiniteGroupoid {
            n_objects,
            source,
            target,
            unit,
            inverse,
            compose: table,
        };
        gpd.check()?;
        Ok(gpd)
    }

    fn check(&self) -> Result<(), GroupoidError> {
        let bad = |m: String| Err(GroupoidError::InvalidGroupoid(m));
        for g in self.arrows() {
            for f in self.arrows() {
                if let Some(gf) = self.compose[g][f] {
                    if gf >= self.n_arrows()
                        || self.source[gf] != self.source[f]
                        || self.target[gf] != self.target[g]
                    {
                        return bad(format!("composite of {g} and {f} has wrong endpoints"));
                    }
                }
            }
        }
        for x in self.objects() {
            let u = self.unit[x];
            if self.source[u] != x || self.target[u] != x {
                return bad(format!("unit at {x} is not a loop at {x}"));
            }
        }
        for f in self.arrows() {
            let (s, t) = (self.source[f], self.target[f]);
            if self.compose[self.unit[t]][f] != Some(f) || self.compose[f][self.unit[s]] != Some(f)
            {
                return bad(format!("unit law fails at arrow {f}"));
            }
            let i = self.inverse[f];
            if self.compose[i][f] != Some(self.unit[s]) || self.compose[f][i] != Some(self.unit[t])
            {
                return bad(format!("inverse law fails at arrow {f}"));
            }
        }
        for h in self.arrows() {
            for g in self.arrows() {
                let Some(hg) = self.compose[h][g] else {
                    continue;
                };
                for f in self.arrows() {
                    let Some(gf) = self.compose[g][f] else {
                        continue;
                    };
                    if self.compose[hg][f] != self.compose[h][gf] {
                        return bad(format!("associativity fails at ({h}, {g}, {f})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// The groupoid with only unit arrows on `n` objects.
    pub fn unit_groupoid(n: usize) -> Self {
        let ids: Vec<usize> = (0..n).collect();
        FiniteGroupoid::new(n, ids.clone(), ids.clone(), ids.clone(), ids, |g, _| g)
            .expect("unit groupoid")
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_arrows(&self) -> usize {
        self.source.len()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.n_objects
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.n_arrows()
    }

    pub fn source(&self, f: usize) -> usize {
        self.source[f]
    }

    pub fn target(&self, f: usize) -> usize {
        self.target[f]
    }

    pub fn unit(&self, x: usize) -> usize {
        self.unit[x]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    /// `g ∘ f`, defined when `target(f) = source(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    /// Arrows `x → y`, ascending.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.arrows()
            .filter(|&f| self.source[f] == x && self.target[f] == y)
            .collect()
    }

    /// Orbit (connected component) label of each object, numbered by least
    /// member.
    pub fn orbit_labels(&self) -> Vec<usize> {
        components(
            self.n_objects,
            self.arrows().map(|f| (self.source[f], self.target[f])),
        )
    }
}

pub fn action_groupoid(act: &FiniteAction) -> FiniteGroupoid {
    let g = act.group();
    let n = act.n_objects();
    let arrows = g.order() * n;
    let parts = |a: usize| (a / n, a % n);
    let source = (0..arrows).map(|a| parts(a).1).collect();
    let target = (0..arrows).map(|a| {
        let (h, x) = parts(a);
        act.act(h, x)
    });
    let unit = (0..n).map(|x| act.arrow_index(g.identity(), x)).collect();
    let inverse = (0..arrows)
        .map(|a| {
            let (h, x) = parts(a);
            act.arrow_index(g.inv(h), act.act(h, x))
        })
        .collect();
    // (h, g·x) ∘ (g, x) = (hg, x)
    let compose = |second: usize, first: usize| {
        let (h, _) = parts(second);
        let (k, x) = parts(first);
        act.arrow_index(g.mul(h, k), x)
    };
    FiniteGroupoid::new(n, source, target.collect(), unit, inverse, compose)
        .expect("action groupoid axioms")
}

/// Orbits, each sorted, ordered by least object.
pub fn orbits(gpd: &FiniteGroupoid) -> Vec<Vec<usize>> {
    partition_by(&gpd.orbit_labels())
}

/// The isotropy group at `x`, elements indexed by the ascending arrow list of
/// `gpd.hom(x, x)`.
pub fn isotropy(gpd: &FiniteGroupoid, x: usize) -> FiniteGroup {
    let loops = gpd.hom(x, x);
    let pos = |a: usize| {
        loops
            .iter()
            .position(|&l| l == a)
            .expect("loops are closed")
    };
    let table = loops
        .iter()
        .map(|&g| {
            loops
                .iter()
                .map(|&h| pos(gpd.compose(g, h).expect("loops compose")))
                .collect()
        })
        .collect();
    FiniteGroup::new(table).expect("isotropy is a group")
}

/// A functor between finite groupoids, given on objects and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupoidMorphism {
    pub on_objects: Vec<usize>,
    pub on_arrows: Vec<usize>,
}

impl GroupoidMorphism {
    pub fn identity(gpd: &FiniteGroupoid) -> Self {
        GroupoidMorphism {
            on_objects: gpd.objects().collect(),
            on_arrows: gpd.arrows().collect(),
        }
    }

    /// Checks sizes, sources, targets, units and composition.
    pub fn validate(
        &self,
        dom: &FiniteGroupoid,
        cod: &FiniteGroupoid,
    ) -> Result<(), GroupoidError> {
        let bad = |m: String| Err(GroupoidError::MalformedMorphism(m));
        if self.on_objects.len() != dom.n_objects() || self.on_arrows.len() != dom.n_arrows() {
            return bad("size does not match the domain".into());
        }
        if self.on_objects.iter().any(|&y| y >= cod.n_objects())
            || self.on_arrows.iter().any(|&a| a >= cod.n_arrows())
        {
            return bad("image out of range".into());
        }
        for f in dom.arrows() {
            let img = self.on_arrows[f];
            if cod.source(img) != self.on_objects[dom.source(f)]
                || cod.target(img) != self.on_objects[dom.target(f)]
            {
                return bad(format!(
                    "arrow {f} is not sent between the images of its endpoints"
                ));
            }
        }
        for x in dom.objects() {
            if self.on_arrows[dom.unit(x)] != cod.unit(self.on_objects[x]) {
                return bad(format!("unit at {x} is not preserved"));
            }
        }
        for g in dom.arrows() {
            for f in dom.arrows() {
                if let Some(gf) = dom.compose(g, f) {
                    if cod.compose(self.on_arrows[g], self.on_arrows[f]) != Some(self.on_arrows[gf])
                    {
                        return bad(format!("composition of {g} and {f} is not preserved"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupoidMorphism) -> GroupoidMorphism {
        GroupoidMorphism {
            on_objects: self
                .on_objects
                .iter()
                .map(|&x| other.on_objects[x])
                .collect(),
            on_arrows: self.on_arrows.iter().map(|&a| other.on_arrows[a]).collect(),
        }
    }
}

/// `(λ, φ)` with `λ: G → H` a homomorphism and `φ: M → N` equivariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionMorphism {
    pub lambda: Vec<usize>,
    pub phi: Vec<usize>,
}

impl ActionMorphism {
    pub fn identity(act: &FiniteAction) -> Self {
        ActionMorphism {
            lambda: act.group().elements().collect(),
            phi: (0..act.n_objects()).collect(),
        }
    }

    pub fn validate(&self, dom: &FiniteAction, cod: &FiniteAction) -> Result<(), GroupoidError> {
        let bad = |m: String| Err(GroupoidError::MalformedMorphism(m));
        let (g, h) = (dom.group(), cod.group());
        if self.lambda.len() != g.order() || self.phi.len() != dom.n_objects() {
            return bad("size does not match the domain".into());
        }
        if self.lambda.iter().any(|&x| x >= h.order())
            || self.phi.iter().any(|&y| y >= cod.n_objects())
        {
            return bad("image out of range".into());
        }
        if !g.is_homomorphism(h, &self.lambda) {
            return bad("lambda is not a group homomorphism".into());
        }
        for a in g.elements() {
            for x in 0..dom.n_objects() {
                if self.phi[dom.act(a, x)] != cod.act(self.lambda[a], self.phi[x]) {
                    return bad(format!("phi is not equivariant at g={a}, x={x}"));
                }
            }
        }
        Ok(())
    }

    /// `(g, x) ↦ (λ(g), φ(x))` on action groupoid arrows.
    pub fn to_groupoid_morphism(&self, dom: &FiniteAction, cod: &FiniteAction) -> GroupoidMorphism {
        let on_arrows = (0..dom.group().order() * dom.n_objects())
            .map(|a| {
                let (g, x) = dom.arrow_parts(a);
                cod.arrow_index(self.lambda[g], self.phi[x])
            })
            .collect();
        GroupoidMorphism {
            on_objects: self.phi.clone(),
            on_arrows,
        }
    }

    /// `other ∘ self`
    pub fn then(&self, other: &ActionMorphism) -> ActionMorphism {
        ActionMorphism {
            lambda: self.lambda.iter().map(|&g| other.lambda[g]).collect(),
            phi: self.phi.iter().map(|&x| other.phi[x]).collect(),
        }
    }
}
