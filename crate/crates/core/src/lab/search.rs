//! Named properties and the search for structures violating them.

use crate::axioms::{decomposition_counterexample, is_basic_lattice, is_basic_semilattice};
use crate::error::{Error, Result};
use crate::spectrum::{maximal_centred_sets, rho_injective, separativity_chain, tight_characters};
use crate::structure::{is_generalized_boolean, is_separative, is_ssc, OrderTables, P0Set};
use crate::tight::verify_fgrho;

use super::enumerate::{enumerate_structures, GENERAL_ENUM_CAP, REFLEXIVE_ENUM_CAP};
use super::families::d3;
use super::random::random_structure;

/// A property checked on every structure it applies to.
pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    applies: fn(&P0Set) -> bool,
    holds: fn(&P0Set) -> bool,
    /// Fixed candidates replacing the enumeration and random stages.
    fixed: Option<fn() -> Vec<P0Set>>,
}

fn always(_: &P0Set) -> bool {
    true
}

fn meet_semilattice(b: &P0Set) -> bool {
    OrderTables::new(b).is_meet_semilattice()
}

pub static SUITES: &[Suite] = &[
    Suite {
        name: "separative_implies_rho_injective",
        summary: "separativity forces ρ to be injective",
        applies: always,
        holds: |b| !is_separative(b) || rho_injective(b),
        fixed: None,
    },
    Suite {
        name: "rho_injective_implies_ssc",
        summary: "injective ρ forces section semicomplementation",
        applies: always,
        holds: |b| !rho_injective(b) || is_ssc(b),
        fixed: None,
    },
    Suite {
        name: "rho_injective_implies_separative_on_meet_semilattices_converse_free",
        summary: "on meet semilattices injective ρ gives back separativity",
        applies: meet_semilattice,
        holds: |b| !rho_injective(b) || is_separative(b),
        fixed: None,
    },
    Suite {
        name: "separativity_chain",
        summary: "the separativity chain and its collapse on meet semilattices",
        applies: always,
        holds: |b| {
            let r = separativity_chain(b);
            r.holds("chain_respected")
                && r.get("semilattice_equivalence")
                    .is_some_and(|v| v.is_skipped() || v.holds)
        },
        fixed: None,
    },
    Suite {
        name: "fgrho",
        summary: "covers agree with inclusions between meets and joins of ρ-images",
        applies: |b| b.size() <= crate::tight::FGRHO_CAP,
        holds: |b| verify_fgrho(b).is_ok_and(|r| r.passed()),
        fixed: None,
    },
    Suite {
        name: "characters_are_maximal_centred",
        summary: "tight characters are the indicators of maximal centred sets",
        applies: always,
        holds: |b| match (tight_characters(b), maximal_centred_sets(b)) {
            (Ok(c), Ok(m)) => c.chars == m,
            _ => false,
        },
        fixed: None,
    },
    Suite {
        name: "basic_lattice_is_basic_semilattice",
        summary: "basic lattices satisfy the basic semilattice axioms",
        applies: is_basic_lattice,
        holds: is_basic_semilattice,
        fixed: None,
    },
    Suite {
        name: "reflexive_basic_lattice_iff_gba",
        summary: "a partial order is a basic lattice exactly when it is a generalized Boolean algebra",
        applies: P0Set::is_reflexive,
        holds: |b| is_basic_lattice(b) == is_generalized_boolean(b),
        fixed: None,
    },
    Suite {
        name: "decomposition_holds_on_D3",
        summary: "the diamond with three atoms satisfies Decomposition",
        applies: always,
        holds: |b| decomposition_counterexample(b, &OrderTables::new(b)).is_none(),
        fixed: Some(|| vec![d3()]),
    },
];

fn suite(name: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// The first structure violating `suite`: fixed candidates if the suite has
/// them, otherwise every enumerable structure of size up to `bound` and
/// then random ones of size up to `bound`, visiting at most `budget`
/// structures in all.
pub fn search_counterexample(
    suite_name: &str,
    bound: usize,
    budget: usize,
    seed: u64,
) -> Result<Option<P0Set>> {
    let s = suite(suite_name)?;
    let mut visited = 0usize;
    let mut check = |b: P0Set| -> Option<Option<P0Set>> {
        if visited >= budget {
            return Some(None);
        }
        visited += 1;
        ((s.applies)(&b) && !(s.holds)(&b)).then_some(Some(b))
    };
    if let Some(fixed) = s.fixed {
        for b in fixed() {
            if let Some(found) = check(b) {
                return Ok(found);
            }
        }
        return Ok(None);
    }
    for (reflexive, cap) in [(true, REFLEXIVE_ENUM_CAP), (false, GENERAL_ENUM_CAP)] {
        for n in 1..=bound.min(cap) {
            for b in enumerate_structures(n, reflexive)? {
                if !reflexive && b.is_reflexive() && n <= REFLEXIVE_ENUM_CAP {
                    continue;
                }
                if let Some(found) = check(b) {
                    return Ok(found);
                }
            }
        }
    }
    if bound == 0 {
        return Ok(None);
    }
    for k in 0u64.. {
        if let Some(found) = check(random_structure(bound, seed.wrapping_add(k))?) {
            return Ok(found);
        }
    }
    unreachable!("the budget ends the random stage")
}

/// Random stage of [`search_counterexample`] only.
pub fn search_random(
    suite_name: &str,
    bound: usize,
    budget: usize,
    seed: u64,
) -> Result<Option<P0Set>> {
    let s = suite(suite_name)?;
    for k in 0..budget as u64 {
        let b = random_structure(bound, seed.wrapping_add(k))?;
        if (s.applies)(&b) && !(s.holds)(&b) {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separativity_search_finds_nothing() {
        let found = search_counterexample("separative_implies_rho_injective", 5, 10_000, 1).unwrap();
        assert_eq!(found, None);
    }

    #[test]
    fn converse_on_semilattices() {
        let found = search_counterexample(
            "rho_injective_implies_separative_on_meet_semilattices_converse_free",
            5,
            5_000,
            1,
        )
        .unwrap();
        assert_eq!(found, None);
    }

    #[test]
    fn diamond_violates_decomposition() {
        let found = search_counterexample("decomposition_holds_on_D3", 0, 1, 0).unwrap();
        assert_eq!(found, Some(d3()));
    }

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(matches!(
            search_counterexample("nope", 3, 10, 0),
            Err(Error::UnknownSuite(_))
        ));
    }
}
