//! Finite matrix groups generated by explicit matrices.

use super::matrix::{CycMatrix, Generators};
use super::MonodromyError;
use std::collections::{HashSet, VecDeque};

/// Largest group the closure will build.
pub const MAX_GROUP_ORDER: usize = 1000;

/// The two solvable subgroups of `SL_3` that can occur as the monodromy at
/// `∞` of `Kl_3` in characteristic 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupName {
    /// `⟨S, T, V⟩`, of order 108.
    G108,
    /// `⟨S, T, V, UVU^{-1}⟩`, of order 216.
    G216,
}

impl GroupName {
    /// The expected order.
    pub fn order(self) -> usize {
        match self {
            Self::G108 => 108,
            Self::G216 => 216,
        }
    }
}

/// A finite group of matrices.
#[derive(Debug, Clone)]
pub struct MatGroup {
    /// Which group.
    pub name: GroupName,
    /// All elements, identity first.
    pub elements: Vec<CycMatrix>,
    /// The generators used.
    pub generators: Vec<CycMatrix>,
}

impl MatGroup {
    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Membership test.
    pub fn contains(&self, m: &CycMatrix) -> bool {
        self.elements.contains(m)
    }
}

/// Breadth-first closure of the generators under right multiplication.
/// Every generator must have determinant `1`.
pub fn generate(generators: &[CycMatrix]) -> Result<Vec<CycMatrix>, MonodromyError> {
    for g in generators {
        g.require_special()?;
    }
    let id = CycMatrix::identity();
    let mut seen: HashSet<CycMatrix> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if seen.len() > MAX_GROUP_ORDER {
                    return Err(MonodromyError::ClosureOverflow {
                        limit: MAX_GROUP_ORDER,
                    });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

/// Builds `G108` or `G216` from the literal generators and checks its order.
pub fn build_group(name: GroupName) -> Result<MatGroup, MonodromyError> {
    let g = Generators::new();
    let mut generators = vec![g.s.clone(), g.t.clone(), g.v.clone()];
    if name == GroupName::G216 {
        generators.push(g.uvu_inv());
    }
    let elements = generate(&generators)?;
    if elements.len() != name.order() {
        return Err(MonodromyError::UnexpectedOrder {
            expected: name.order(),
            got: elements.len(),
        });
    }
    Ok(MatGroup {
        name,
        elements,
        generators,
    })
}
