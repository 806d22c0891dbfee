//! Monodromy-group diagnostics by explicit closure.

use std::collections::{HashSet, VecDeque};

use super::passport::{DessinPassport, MonodromyTriple};
use crate::error::{Error, Result};
use crate::perm::{is_transitive, Perm};

/// Largest group the closure will enumerate.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub transitive: bool,
    pub uniform: bool,
    pub regular: bool,
    pub monodromy_group_order: u64,
    pub center_trivial: bool,
}

/// All elements of `⟨gens⟩`, refusing groups larger than `limit`.
pub fn group_closure(gens: &[Perm], limit: usize) -> Result<Vec<Perm>> {
    let n = gens.first().map_or(0, Perm::degree);
    let id = Perm::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut elems = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                if elems.len() >= limit {
                    return Err(Error::Resource(format!(
                        "monodromy group has more than {limit} elements"
                    )));
                }
                elems.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(elems)
}

pub fn diagnostics(t: &MonodromyTriple) -> Result<Diagnostics> {
    let gens = [t.sigma0.clone(), t.sigma_inf.clone()];
    let group = group_closure(&gens, MAX_GROUP_ORDER)?;
    let center = group
        .iter()
        .filter(|z| gens.iter().all(|g| z.then(g) == g.then(z)))
        .count();
    let passport = DessinPassport::from_triple(t)?;
    Ok(Diagnostics {
        transitive: is_transitive(&gens),
        uniform: passport.is_uniform(),
        regular: group.len() == t.degree(),
        monodromy_group_order: group.len() as u64,
        center_trivial: center == 1,
    })
}
