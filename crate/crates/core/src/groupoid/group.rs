use super::GroupoidError;

/// A finite group given by its multiplication table on `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, GroupoidError> {
        let bad = |m: &str| Err(GroupoidError::InvalidGroup(m.to_string()));
        let k = table.len();
        if k == 0 {
            return bad("empty table");
        }
        if table
            .iter()
            .any(|r| r.len() != k || r.iter().any(|&x| x >= k))
        {
            return bad("table is not square over 0..k");
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        let Some(identity) = (0..k).find(|&e| (0..k).all(|a| table[e][a] == a && table[a][e] == a))
        else {
            return bad("no identity");
        };
        let inverse: Option<Vec<usize>> = (0..k)
            .map(|a| (0..k).find(|&b| table[a][b] == identity && table[b][a] == identity))
            .collect();
        let Some(inverse) = inverse else {
            return bad("element without inverse");
        };
        Ok(FiniteGroup {
            table,
            identity,
            inverse,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group")
    }

    /// `ℤ_k` with `i·j = i + j mod k`.
    pub fn cyclic(k: usize) -> Result<Self, GroupoidError> {
        Self::new(
            (0..k)
                .map(|i| (0..k).map(|j| (i + j) % k).collect())
                .collect(),
        )
    }

    /// `G × H` with `(g, h)` indexed `g·|H| + h`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let n = h.order();
        let table = (0..g.order() * n)
            .map(|a| {
                (0..g.order() * n)
                    .map(|b| g.mul(a / n, b / n) * n + h.mul(a % n, b % n))
                    .collect()
            })
            .collect();
        Self::new(table).expect("product of groups")
    }

    /// Permutations of `{0, 1, 2}` in lexicographic order, composed as
    /// functions: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| idx([s[t[0]], s[t[1]], s[t[2]]]))
                    .collect()
            })
            .collect();
        Self::new(table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        !subset.is_empty()
            && subset.iter().all(|&a| a < self.order())
            && subset.iter().all(|&a| {
                subset
                    .iter()
                    .all(|&b| subset.contains(&self.mul(a, self.inv(b))))
            })
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        self.elements().all(|g| {
            subgroup
                .iter()
                .all(|&k| subgroup.contains(&self.mul(self.mul(g, k), self.inv(g))))
        })
    }

    /// `map` respects multiplication (hence identity and inverses).
    pub fn is_homomorphism(&self, codomain: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == codomain.mul(map[a], map[b]))
            })
    }

    /// Preimage of the identity, ascending.
    pub fn kernel(&self, codomain: &FiniteGroup, map: &[usize]) -> Vec<usize> {
        self.elements()
            .filter(|&a| map[a] == codomain.identity())
            .collect()
    }

    /// All homomorphisms into `codomain`, by brute force over generators.
    pub fn homomorphisms(&self, codomain: &FiniteGroup) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        loop {
            if let Some(map) = self.extend_from_generators(codomain, &gens, &images) {
                out.push(map);
            }
            let mut i = 0;
            loop {
                if i == images.len() {
                    out.sort();
                    out.dedup();
                    return out;
                }
                images[i] += 1;
                if images[i] < codomain.order() {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
        }
    }

    /// A small generating set, chosen greedily by least element.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in self.elements() {
            if !span.contains(&a) {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Every subgroup as an ascending element list, ordered by size and
    /// then lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found = vec![vec![self.identity]];
        let mut i = 0;
        while i < found.len() {
            let h = found[i].clone();
            for g in self.elements().filter(|g| !h.contains(g)) {
                let mut gens = h.clone();
                gens.push(g);
                let k = self.closure(&gens);
                if !found.contains(&k) {
                    found.push(k);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found
    }

    /// `g H g⁻¹`, ascending.
    pub fn conjugate_subgroup(&self, g: usize, h: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = h
            .iter()
            .map(|&k| self.mul(self.mul(g, k), self.inv(g)))
            .collect();
        out.sort_unstable();
        out
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut span = vec![self.identity];
        let mut i = 0;
        while i < span.len() {
            for &g in gens {
                let x = self.mul(span[i], g);
                if !span.contains(&x) {
                    span.push(x);
                }
            }
            i += 1;
        }
        span.sort_unstable();
        span
    }

    fn extend_from_generators(
        &self,
        codomain: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity] = codomain.identity();
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let v = codomain.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = v;
                    frontier.push(y);
                } else if map[y] != v {
                    return None;
                }
            }
        }
        self.is_homomorphism(codomain, &map).then_some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!((z6.order(), z6.identity(), z6.inv(2)), (6, 0, 4));
        let s3 = FiniteGroup::symmetric3();
        assert!(!s3.is_abelian());
        let z2z3 = FiniteGroup::product(
            &FiniteGroup::cyclic(2).unwrap(),
            &FiniteGroup::cyclic(3).unwrap(),
        );
        assert!(z2z3.is_abelian());
        assert!(FiniteGroup::new(vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::new(vec![vec![1, 0], vec![0, 0]]).is_err());
    }

    #[test]
    fn subgroups() {
        let s3 = FiniteGroup::symmetric3();
        assert!(s3.is_subgroup(&[0, 1]));
        assert!(!s3.is_normal(&[0, 1]));
        assert!(s3.is_normal(&[0, 3, 4]));
        assert!(!s3.is_subgroup(&[0, 1, 2]));
        // trivial, three of order 2, A3, S3
        assert_eq!(s3.subgroups().len(), 6);
        let v4 = FiniteGroup::product(
            &FiniteGroup::cyclic(2).unwrap(),
            &FiniteGroup::cyclic(2).unwrap(),
        );
        assert_eq!(v4.subgroups().len(), 5);
        assert_eq!(FiniteGroup::cyclic(6).unwrap().subgroups().len(), 4);
        assert!(s3.subgroups().iter().all(|h| s3.is_subgroup(h)));
        assert_eq!(s3.conjugate_subgroup(3, &[0, 1]), vec![0, 5]);
    }

    #[test]
    fn homomorphism_counts() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        // Hom(ℤ_m, ℤ_n) has gcd(m, n) elements
        assert_eq!(z4.homomorphisms(&z2).len(), 2);
        assert_eq!(z4.homomorphisms(&FiniteGroup::cyclic(6).unwrap()).len(), 2);
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.homomorphisms(&s3).len(), 10);
        assert_eq!(s3.homomorphisms(&z2).len(), 2);
        assert_eq!(z2.kernel(&z2, &[0, 0]), vec![0, 1]);
    }
}
