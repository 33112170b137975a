use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::{b_matrix, projective_canonical, root_basis, Vec6};
use crate::exact::{ExactMatrix, RatMatrix, Rational};
use crate::WeylError;

/// An element of W(E6), stored as its integer matrix in the basis of simple roots.
///
/// The root-basis matrix is integral and determines the element, so it
/// serves as the canonical key for deduplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElement(pub [[i32; 6]; 6]);

impl WeylElement {
    pub const IDENTITY: WeylElement = {
        let mut m = [[0; 6]; 6];
        let mut i = 0;
        while i < 6 {
            m[i][i] = 1;
            i += 1;
        }
        WeylElement(m)
    };

    /// Converts a coordinate matrix after checking that it preserves `b`
    /// and the root lattice.
    pub fn from_coordinates(g: &RatMatrix) -> Result<Self, WeylError> {
        let b = b_matrix();
        let gt_b_g = g.transpose().mul(&b).and_then(|t| t.mul(g)).map_err(|_| WeylError::NotAnIsometry(0))?;
        if gt_b_g != b {
            return Err(WeylError::NotAnIsometry(0));
        }
        let p = root_basis();
        let r = p.inverse().and_then(|pi| pi.mul(g)).and_then(|t| t.mul(&p)).expect("6x6");
        let mut out = [[0; 6]; 6];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                let x = &r[(i, j)];
                if !x.is_integer() {
                    return Err(WeylError::NotIntegral);
                }
                *v = x.to_i64().and_then(|n| i32::try_from(n).ok()).ok_or(WeylError::NotIntegral)?;
            }
        }
        Ok(WeylElement(out))
    }

    /// Matrix acting on coordinate vectors `(X₀, X₁, X₂, X₃, X₆, X₇)`.
    pub fn coordinates(&self) -> RatMatrix {
        let p = root_basis();
        let r = ExactMatrix::from_fn(6, 6, |i, j| Rational::from_int(i64::from(self.0[i][j])));
        p.mul(&r).and_then(|t| t.mul(&p.inverse()?)).expect("6x6")
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = [[0; 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..6).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        WeylElement(m)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn trace(&self) -> i32 {
        (0..6).map(|i| self.0[i][i]).sum()
    }

    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.mul(self);
            k += 1;
            assert!(k <= 64, "element order exceeds 64");
        }
        k
    }

    /// Inverse via `g^{-1} = g^{order-1}`.
    pub fn inverse(&self) -> Self {
        let mut acc = Self::IDENTITY;
        let mut prev = acc;
        loop {
            acc = acc.mul(self);
            if acc.is_identity() {
                return prev;
            }
            prev = acc;
        }
    }

    /// Action on a coordinate vector.
    pub fn apply(&self, v: &Vec6) -> Vec6 {
        apply_matrix(&self.coordinates(), v)
    }
}

pub(crate) fn apply_matrix(g: &RatMatrix, v: &Vec6) -> Vec6 {
    let out = g.mul_vec(v).expect("6x6");
    core::array::from_fn(|i| out[i].clone())
}

/// All elements of a finite matrix group, with an index for lookups.
#[derive(Clone, Debug)]
pub struct GroupTable {
    generators: Vec<WeylElement>,
    elements: Vec<WeylElement>,
    index: BTreeMap<WeylElement, usize>,
}

/// Breadth-first closure of the group generated by coordinate matrices.
pub fn generate_group(generators: &[RatMatrix]) -> Result<GroupTable, WeylError> {
    let gens: Vec<WeylElement> = generators
        .iter()
        .enumerate()
        .map(|(k, g)| {
            WeylElement::from_coordinates(g).map_err(|e| match e {
                WeylError::NotAnIsometry(_) => WeylError::NotAnIsometry(k),
                other => other,
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(GroupTable::close(gens))
}

impl GroupTable {
    pub fn close(generators: Vec<WeylElement>) -> Self {
        let mut elements = alloc::vec![WeylElement::IDENTITY];
        let mut index = BTreeMap::new();
        index.insert(WeylElement::IDENTITY, 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            head += 1;
            for g in &generators {
                let y = g.mul(&x);
                if let Entry::Vacant(e) = index.entry(y) {
                    e.insert(elements.len());
                    elements.push(y);
                }
            }
        }
        GroupTable { generators, elements, index }
    }

    /// Rebuilds a table from stored parts, checking that the element list
    /// is closed under left multiplication by the generators.
    pub fn from_parts(generators: Vec<WeylElement>, elements: Vec<WeylElement>) -> Result<Self, WeylError> {
        let index: BTreeMap<WeylElement, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        if index.len() != elements.len() || !index.contains_key(&WeylElement::IDENTITY) {
            return Err(WeylError::NotInGroup);
        }
        for x in &elements {
            for g in &generators {
                if !index.contains_key(&g.mul(x)) {
                    return Err(WeylError::NotInGroup);
                }
            }
        }
        Ok(GroupTable { generators, elements, index })
    }

    /// Rebuilds a table from parts whose integrity is known by other means
    /// (a checksum). Only distinctness and the identity are checked.
    pub fn from_trusted_parts(generators: Vec<WeylElement>, elements: Vec<WeylElement>) -> Result<Self, WeylError> {
        let index: BTreeMap<WeylElement, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        if index.len() != elements.len()
            || !index.contains_key(&WeylElement::IDENTITY)
            || generators.iter().any(|g| !index.contains_key(g))
        {
            return Err(WeylError::NotInGroup);
        }
        Ok(GroupTable { generators, elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn contains(&self, g: &WeylElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &WeylElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of `elements[i] · elements[j]`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].mul(&self.elements[j])]
    }

    pub fn generator_coordinates(&self) -> Vec<RatMatrix> {
        self.generators.iter().map(WeylElement::coordinates).collect()
    }

    pub fn centralizer_order(&self, g: &WeylElement) -> Result<usize, WeylError> {
        if !self.contains(g) {
            return Err(WeylError::NotInGroup);
        }
        Ok(self.elements.iter().filter(|h| h.mul(g) == g.mul(h)).count())
    }

    /// Orbit of a coordinate vector under the linear action, optionally
    /// identifying vectors up to scalars.
    pub fn orbit(&self, seed: &Vec6, projective: bool) -> BTreeSet<Vec6> {
        let gens = self.generator_coordinates();
        let canon = |v: Vec6| if projective { projective_canonical(&v) } else { v };
        orbit_under(&gens, canon(seed.clone()), |g, v| canon(apply_matrix(g, v)))
    }

    /// Conjugation orbit of an element.
    pub fn conjugacy_class(&self, g: &WeylElement) -> BTreeSet<WeylElement> {
        let pairs: Vec<(WeylElement, WeylElement)> = self.generators.iter().map(|s| (*s, s.inverse())).collect();
        orbit_under(&pairs, *g, |(s, si), x| s.mul(x).mul(si))
    }
}

/// Breadth-first orbit of `seed` under the maps `act(g, ·)` for `g` in `gens`.
pub fn orbit_under<G, T: Ord + Clone>(gens: &[G], seed: T, act: impl Fn(&G, &T) -> T) -> BTreeSet<T> {
    let mut seen = BTreeSet::new();
    seen.insert(seed.clone());
    let mut queue = VecDeque::from([seed]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = act(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}
