//! Finite groups as multiplication tables, and the two Hopf algebras every group gives.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{HopfError, Result};
use crate::exactmath::{field_make, Matrix};
use crate::hopf::{dual, HopfAlgebraData};

/// A finite group on `0..order`, element `0` being the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates identity, closure, associativity and inverses exhaustively.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let g = table.len();
        let bad = |m: String| Err(HopfError::Malformed(format!("group table: {m}")));
        if g == 0 {
            return bad("empty".into());
        }
        if table.iter().any(|r| r.len() != g || r.iter().any(|&x| x >= g)) {
            return bad("not a closed square table".into());
        }
        for a in 0..g {
            if table[0][a] != a || table[a][0] != a {
                return bad(format!("element 0 is not an identity (at {a})"));
            }
        }
        for a in 0..g {
            for b in 0..g {
                for c in 0..g {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(g);
        for a in 0..g {
            match (0..g).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(GroupTable {
            name: name.into(),
            table,
            inverse,
        })
    }

    /// Closes `generators` under `mul`; elements are numbered in breadth-first order.
    pub fn generate<T, F>(name: &str, identity: T, generators: &[T], mul: F) -> Result<Self>
    where
        T: Clone + Ord,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: BTreeMap<T, usize> = BTreeMap::from([(identity, 0)]);
        let mut frontier = 0;
        while frontier < elems.len() {
            let x = elems[frontier].clone();
            for s in generators {
                let y = mul(&x, s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            frontier += 1;
        }
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        Self::new(name, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
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

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(format!("C{n}"), table).expect("cyclic group table")
    }

    pub fn klein_four() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        Self::new("C2xC2", table).expect("Klein four table")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Dihedral group of order 8: symmetries of a square.
    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    pub fn alternating4() -> Self {
        Self::from_permutations("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    /// Quaternion group `{+-1, +-i, +-j, +-k}` from integer Hamilton products.
    pub fn quaternion() -> Self {
        type Q = [i8; 4];
        fn hamilton(p: &Q, q: &Q) -> Q {
            let [a1, b1, c1, d1] = *p;
            let [a2, b2, c2, d2] = *q;
            [
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ]
        }
        Self::generate("Q8", [1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], hamilton)
            .expect("quaternion table")
    }

    /// Permutations act on the left: `(p q)(x) = p(q(x))`.
    pub fn from_permutations(name: &str, generators: &[Vec<usize>]) -> Self {
        let degree = generators[0].len();
        let identity: Vec<usize> = (0..degree).collect();
        Self::generate(name, identity, generators, |p, q| q.iter().map(|&x| p[x]).collect())
            .expect("permutation group table")
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let g = self.order();
        let mut seen = vec![false; g];
        let mut classes = Vec::new();
        for a in 0..g {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..g).map(|x| self.mul(self.mul(x, a), self.inv(x))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }
}

/// The group algebra `CG` over `Q(zeta_N)`: grouplike basis, `S(g) = g^-1`.
pub fn group_algebra(t: &GroupTable, order: u32) -> Result<HopfAlgebraData> {
    let f = field_make(order)?;
    let g = t.order();
    let mut mult = vec![f.zero(); g * g * g];
    let mut comult = vec![f.zero(); g * g * g];
    for a in 0..g {
        for b in 0..g {
            mult[(a * g + b) * g + t.mul(a, b)] = f.one();
        }
        comult[(a * g + a) * g + a] = f.one();
    }
    let mut antipode = Matrix::zeros(f, g, g);
    for a in 0..g {
        antipode[(a, t.inv(a))] = f.one();
    }
    let mut unit = vec![f.zero(); g];
    unit[0] = f.one();
    HopfAlgebraData::new(
        format!("C[{}]", t.name()),
        f,
        g,
        mult,
        unit,
        comult,
        vec![f.one(); g],
        antipode,
    )
}

/// The function algebra `Fun(G) = (CG)*` on the basis of point indicators `delta_g`.
pub fn dual_group_algebra(t: &GroupTable, order: u32) -> Result<HopfAlgebraData> {
    Ok(dual(&group_algebra(t, order)?).with_name(format!("Fun({})", t.name())))
}
