//! Named batches of checks over one group, as run by the command line.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use super::constructions::generalized_b_on;
use super::theorems::{camina_on, enumerate_or_scope, wielandt_on};
use super::{
    check_centralizer_congruence, check_coset_lemma, check_multiplier_congruence,
    separating_subgroup_survey, simple_group_witness, subject, Diagnosis, Result, Verdict, Witness,
};
use crate::arith;
use crate::group::{ElementSet, Group};
use crate::rationality::{
    central_characters, is_rational, is_rational_numeric, rational_closure, sigma_action,
    values_galois_consistent, verify_automorphism, RationalityError,
};
use crate::ring::{power_map_set, sigma_m, CoeffTransform, GroupRingElement};
use crate::sring::{EnumerationLimits, SRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Multiplier,
    Wielandt,
    Camina,
    Separating,
    Rationality,
    /// Every suite above plus the generalized B-group diagnostic.
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["multiplier", "wielandt", "camina", "separating", "rationality", "all"];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "multiplier" => Suite::Multiplier,
            "wielandt" => Suite::Wielandt,
            "camina" => Suite::Camina,
            "separating" => Suite::Separating,
            "rationality" => Suite::Rationality,
            "all" => Suite::All,
            _ => return Err(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Multiplier, Suite::Wielandt, Suite::Camina, Suite::Separating, Suite::Rationality, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub limits: EnumerationLimits,
    pub tol: f64,
    pub seed: u64,
    /// Primes up to this bound are used for the class-sum congruences.
    pub max_prime: u64,
    /// Fill in `elapsed_ms` on every diagnosis.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            limits: EnumerationLimits::default(),
            tol: crate::rationality::DEFAULT_TOLERANCE,
            seed: crate::rationality::DEFAULT_CHARACTER_SEED,
            max_prime: 13,
            timings: false,
        }
    }
}

/// Folds a sub-check into an aggregate diagnosis.
fn absorb(into: &mut Diagnosis, d: Diagnosis) {
    if d.verdict == Verdict::Refuted {
        into.verdict = Verdict::Refuted;
        into.witnesses.extend(d.witnesses);
        into.notes.extend(d.notes);
    }
}

pub fn run_suite(suite: Suite, g: &Arc<Group>, cfg: &SuiteConfig) -> Result<Vec<Diagnosis>> {
    let start = Instant::now();
    let rings = enumerate_or_scope(g, &cfg.limits)?;
    let enumeration_ms = start.elapsed().as_millis() as u64;
    let scoped = |check: &str, f: &dyn Fn(&[SRing]) -> Result<Diagnosis>| -> Result<Diagnosis> {
        let start = Instant::now();
        let mut d = match &rings {
            Ok(r) => f(r)?,
            Err(reason) => Diagnosis::new(check, subject(g)).out_of_scope(reason.clone()),
        };
        if cfg.timings {
            // shared enumeration time is charged to every check that used it
            d.elapsed_ms = Some(enumeration_ms + start.elapsed().as_millis() as u64);
        }
        Ok(d)
    };
    let timed = |f: &dyn Fn() -> Result<Diagnosis>| -> Result<Diagnosis> {
        let start = Instant::now();
        let mut d = f()?;
        if cfg.timings {
            d.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok(d)
    };
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Multiplier {
        out.push(timed(&|| congruence_sweep(g, cfg.max_prime))?);
        out.push(scoped("multiplier_automorphism", &|r| automorphism_sweep(g, r))?);
        out.push(scoped("multiplier_power", &|r| power_sweep(g, r))?);
    }
    if all || suite == Suite::Wielandt {
        out.push(scoped("wielandt", &|r| Ok(wielandt_on(g, r)))?);
        for (p, _) in g.normal_cyclic_sylow_primes() {
            out.push(timed(&|| check_centralizer_congruence(g, p))?);
            out.push(timed(&|| check_coset_lemma(g, p))?);
        }
    }
    if all || suite == Suite::Camina {
        out.push(scoped("camina", &|r| Ok(camina_on(g, r)))?);
    }
    if all || suite == Suite::Separating {
        out.push(scoped("separating", &|r| {
            let mut d = Diagnosis::new("separating", subject(g));
            for a in r {
                let s = separating_subgroup_survey(a);
                // flagged instances carry witnesses without refuting
                if s.verdict == Verdict::Refuted {
                    d.verdict = Verdict::Refuted;
                }
                d.witnesses.extend(s.witnesses);
            }
            Ok(d.note(format!("{} central S-rings surveyed", r.len())))
        })?);
    }
    if all || suite == Suite::Rationality {
        out.push(scoped("rationality", &|r| rationality_sweep(g, r, cfg))?);
        out.push(timed(&|| simple_group_witness(g))?);
    }
    if all {
        out.push(scoped("generalized_b_group", &|r| Ok(generalized_b_on(g, r)))?);
    }
    Ok(out)
}

fn congruence_sweep(g: &Arc<Group>, max_prime: u64) -> Result<Diagnosis> {
    let mut d = Diagnosis::new("multiplier_congruence", subject(g));
    let primes = arith::primes_up_to(max_prime);
    let k = g.class_count();
    for class in 0..k {
        for &p in &primes {
            absorb(&mut d, check_multiplier_congruence(g, class, p)?);
        }
    }
    Ok(d.note(format!("{k} classes, primes up to {max_prime}")))
}

/// Every multiplier permutes the basic sets and preserves structure constants.
fn automorphism_sweep(g: &Arc<Group>, rings: &[SRing]) -> Result<Diagnosis> {
    let mut d = Diagnosis::new("multiplier_automorphism", subject(g));
    let units = arith::units_mod(g.order() as u64);
    let mut triples = 0;
    for a in rings {
        for &m in &units {
            match verify_automorphism(a, m as i64) {
                Ok(rep) => triples += rep.triples_checked,
                Err(RationalityError::TheoremViolation(msg)) => {
                    d.refute(Witness::sring(a));
                    d.notes.push(msg);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(d.note(format!("{} central S-rings, {} multipliers, {triples} triples", rings.len(), units.len())))
}

/// For a prime `p` above the group order: the mod-`p` remainder of `X^p`
/// equals the class-sum image of `X` under `x -> x^p`, for every basic set.
fn power_sweep(g: &Arc<Group>, rings: &[SRing]) -> Result<Diagnosis> {
    let n = g.order() as u64;
    let p = (n + 1..).find(|&q| arith::is_prime(q)).unwrap();
    let mut d = Diagnosis::new("multiplier_power", subject(g));
    let reduce = CoeffTransform::mod_p(p);
    let mut seen: HashMap<ElementSet, bool> = HashMap::new();
    for a in rings {
        for x in a.basic_sets() {
            if seen.contains_key(x) {
                continue;
            }
            let sum = GroupRingElement::set_sum(g, x);
            let reduced = sum.pow(p)?.transform(&reduce)?;
            let ok = reduced.support() == power_map_set(g, x, p as i64) && sigma_m(&sum, p as i64)? == reduced;
            if !ok {
                d.refute(Witness::set(format!("remainder of p-th power differs, p = {p}"), x));
            }
            seen.insert(x.clone(), ok);
        }
    }
    Ok(d.note(format!("p = {p}; {} distinct basic sets", seen.len())))
}

/// Rationality by multipliers agrees with rationality of character values;
/// primitivity and the multiplier action pass to the rational closure.
fn rationality_sweep(g: &Arc<Group>, rings: &[SRing], cfg: &SuiteConfig) -> Result<Diagnosis> {
    let mut d = Diagnosis::new("rationality", subject(g));
    let units = arith::units_mod(g.order() as u64);
    let mut rational = 0;
    for a in rings {
        let tc = rational_closure(a)?;
        let by_multipliers = is_rational(a)?;
        rational += usize::from(by_multipliers);
        let table = central_characters(a, cfg.seed)?;
        let mut failures = Vec::new();
        if by_multipliers != is_rational_numeric(&table, cfg.tol) {
            failures.push(format!("multiplier rationality {by_multipliers} disagrees with character values"));
        }
        if by_multipliers != tc.closed.same_partition(a) {
            failures.push("rational closure differs from rationality".to_string());
        }
        if a.is_primitive() != tc.closed.is_primitive() {
            failures.push("primitivity differs from the rational closure".to_string());
        }
        if !rational_closure(&tc.closed)?.closed.same_partition(&tc.closed) {
            failures.push("rational closure is not idempotent".to_string());
        }
        if table.residual > cfg.tol.max(1e-6) {
            failures.push(format!("character residual {:.3e}", table.residual));
        }
        for &m in &units {
            let perm = sigma_action(a, m as i64)?;
            if !values_galois_consistent(&table, &perm, cfg.tol) {
                failures.push(format!("character columns not permuted by m = {m}"));
                break;
            }
        }
        if !failures.is_empty() {
            d.refute(Witness::sring(a));
            d.notes.extend(failures);
        }
    }
    Ok(d.note(format!("{} central S-rings, {rational} rational", rings.len())))
}
