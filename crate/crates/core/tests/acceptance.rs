//! One pass/fail line per acceptance criterion, each with a runtime budget.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use schurring::arith::{primes_up_to, units_mod};
use schurring::cli::run_with_output;
use schurring::corpus::{build_psl27, builtin, group_by_name};
use schurring::group::{build_cyclic, ElementSet, Group};
use schurring::rationality::{
    central_characters, is_rational, is_rational_numeric, rational_closure, sigma_action,
    verify_automorphism, DEFAULT_CHARACTER_SEED,
};
use schurring::sring::{enumerate_central_srings, EnumerationLimits, SRing};
use schurring::verifiers::{
    build_product_rank3, camina_b_group_check, camina_pairs, check_multiplier_congruence, paley_set,
    simple_group_witness, skew_hadamard_rank3, wielandt_central_check, Verdict, Witness,
};

type Outcome = Result<String, String>;

/// Identifier, title, runtime budget in seconds, check.
type Criterion = (&'static str, &'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn named(name: &str) -> Arc<Group> {
    Arc::new(group_by_name(name, 512).unwrap())
}

fn corpus() -> Vec<(String, Arc<Group>)> {
    builtin().into_iter().map(|(n, g)| (n, Arc::new(g))).collect()
}

/// Every corpus group within the class cap, with its central S-rings.
fn enumerated(cap: usize) -> Vec<(String, Arc<Group>, Vec<SRing>)> {
    let limits = EnumerationLimits { max_classes: cap, ..Default::default() };
    corpus()
        .into_iter()
        .filter(|(_, g)| g.class_count() <= cap)
        .map(|(n, g)| {
            let rings = enumerate_central_srings(&g, &limits).unwrap();
            (n, g, rings)
        })
        .collect()
}

fn ac1() -> Outcome {
    let mut rings = 0;
    for (name, g) in corpus() {
        for a in [SRing::class_algebra(&g), SRing::trivial(&g)] {
            let blocks = a.canonical_form();
            ensure!(common::is_sring(&g, &blocks), "{name}: rank {} fails the axioms", a.rank());
            ensure!(a.is_central(), "{name}: rank {} not central", a.rank());
            let c = a.constants();
            for x in 0..a.rank() {
                for y in 0..a.rank() {
                    let total: u64 = (0..a.rank()).map(|z| c.get(x, y, z) * a.basic_set(z).len() as u64).sum();
                    let want = (a.basic_set(x).len() * a.basic_set(y).len()) as u64;
                    ensure!(total == want, "{name}: sum over Z of c[{x}][{y}][Z]|Z| = {total}, want {want}");
                }
            }
            rings += 1;
        }
    }
    Ok(format!("{rings} S-rings validated"))
}

fn ac2() -> Outcome {
    let mut triples = 0;
    let mut rings = 0;
    for (name, g, list) in enumerated(14) {
        for a in &list {
            rings += 1;
            for m in units_mod(g.order() as u64) {
                let m = m as i64;
                let perm = sigma_action(a, m).map_err(|e| format!("{name}: {e}"))?;
                for (x, set) in a.basic_sets().iter().enumerate() {
                    let image: Vec<usize> = {
                        let mut v: Vec<usize> = set.iter().map(|y| g.pow(y, m)).collect();
                        v.sort_unstable();
                        v
                    };
                    ensure!(image == a.basic_set(perm[x]).as_slice(), "{name}: X^({m}) is not basic");
                }
                let rep = verify_automorphism(a, m).map_err(|e| format!("{name}, m = {m}: {e}"))?;
                triples += rep.triples_checked;
            }
        }
    }
    Ok(format!("{rings} central S-rings, {triples} structure constants preserved"))
}

fn ac3() -> Outcome {
    let mut checks = 0;
    for name in ["S3", "D8", "Q8", "D18", "A4", "F21"] {
        let g = named(name);
        let classes = common::classes(&g);
        for x in &classes {
            for p in primes_up_to(13) {
                let coeffs = common::power_mod(&g, x, p);
                let target = g.pow(x[0], p as i64);
                for y in &classes {
                    let residue = coeffs[y[0]] * y.len() as u64 % p;
                    let expected = if y.contains(&target) { x.len() as u64 % p } else { 0 };
                    ensure!(residue == expected, "{name}, class {x:?}, p = {p}: {residue} vs {expected}");
                }
                let d = check_multiplier_congruence(&g, g.conjugacy_classes().class_of[x[0]], p).unwrap();
                ensure!(d.verdict == Verdict::Confirmed, "{name}, class {x:?}, p = {p}: {d:?}");
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (class, prime) pairs"))
}

fn ac4() -> Outcome {
    let limits = EnumerationLimits { max_classes: 24, ..Default::default() };
    let mut confirmed = Vec::new();
    for (name, g) in corpus() {
        let n = g.order();
        let composite = n > 3 && !schurring::arith::is_prime(n as u64);
        let eligible = composite && !g.normal_cyclic_sylow_primes().is_empty();
        let d = wielandt_central_check(&g, &limits).unwrap();
        ensure!(!d.is_fatal(), "{name} refuted: {:?}", d.witnesses);
        if eligible {
            ensure!(d.verdict == Verdict::Confirmed, "{name}: {:?} {:?}", d.verdict, d.notes);
            confirmed.push(name);
        }
    }
    for must in ["Z4", "Z6", "Z9", "Z12", "S3", "D18", "F21", "F20"] {
        ensure!(confirmed.iter().any(|n| n == must), "{must} not covered");
    }
    let mut sink = Vec::new();
    let code = run_with_output(
        ["schurring", "verify", "wielandt", "--corpus", "builtin", "--limits.class-cap", "24"],
        &mut sink,
    );
    ensure!(code == 0, "command line run exited {code}");
    ensure!(!String::from_utf8_lossy(&sink).contains("\"refuted\""), "command line run reported a refutation");
    Ok(format!("{} groups confirmed", confirmed.len()))
}

fn ac5() -> Outcome {
    let expect: [(&str, usize); 4] = [("S3", 3), ("D8", 2), ("Q8", 2), ("F21", 7)];
    for (name, order) in expect {
        let g = named(name);
        let lib: Vec<Vec<usize>> = camina_pairs(&g).into_iter().map(|c| c.subgroup).collect();
        let scan = common::camina_subgroups(&g);
        ensure!(lib == scan, "{name}: {lib:?} vs coset scan {scan:?}");
        ensure!(lib.len() == 1 && lib[0].len() == order, "{name}: {lib:?}");
    }
    ensure!(camina_pairs(&named("D8"))[0].subgroup == named("D8").center().members.as_slice(), "D8 center");
    ensure!(camina_pairs(&named("Q8"))[0].subgroup == named("Q8").center().members.as_slice(), "Q8 center");
    let mut camina_groups = Vec::new();
    for (name, g) in corpus() {
        if g.class_count() > 14 || camina_pairs(&g).is_empty() {
            continue;
        }
        let d = camina_b_group_check(&g, &EnumerationLimits::default()).unwrap();
        ensure!(d.verdict == Verdict::Confirmed, "{name}: {:?} {:?}", d.verdict, d.notes);
        camina_groups.push(name);
    }
    ensure!(camina_groups.iter().any(|n| n == "Extraspecial27"), "extraspecial group not detected");
    Ok(format!("{} Camina groups confirmed", camina_groups.len()))
}

fn closure_witness(g: &Arc<Group>) -> Result<Vec<Vec<usize>>, String> {
    let d = simple_group_witness(g).map_err(|e| e.to_string())?;
    ensure!(d.verdict == Verdict::Confirmed, "{:?}", d);
    d.witnesses
        .iter()
        .find_map(|w| match w {
            Witness::SRing { basic_sets, primitive: true, central: true, .. } => Some(basic_sets.clone()),
            _ => None,
        })
        .ok_or_else(|| "no primitive central witness".to_string())
}

fn ac6() -> Outcome {
    let a5 = named("A5");
    let sets = closure_witness(&a5)?;
    ensure!(sets.len() == 4, "A5 closure rank {}", sets.len());
    let psl = Arc::new(build_psl27());
    let sets = closure_witness(&psl)?;
    ensure!(sets.len() == 5, "PSL(2,7) closure rank {}", sets.len());
    let classes = common::classes(&psl);
    let sevens: Vec<&Vec<usize>> = classes.iter().filter(|c| psl.element_order(c[0]) == 7).collect();
    ensure!(sevens.len() == 2, "PSL(2,7) has {} classes of order 7", sevens.len());
    let fused = sets.iter().any(|s| sevens.iter().all(|c| c.iter().all(|x| s.binary_search(x).is_ok())) && s.len() == 48);
    ensure!(fused, "7-classes not fused");
    for (g, rank) in [(&a5, 4), (&psl, 5)] {
        let a = SRing::from_partition(g, element_sets(&closure_witness(g)?)).map_err(|e| e.to_string())?;
        ensure!(a.rank() == rank && a.is_primitive() && is_rational(&a).unwrap(), "witness does not revalidate");
        ensure!(!a.same_partition(&SRing::class_algebra(g)) && a.rank() > 2, "witness is not proper");
    }
    Ok("A5 rank 4, PSL(2,7) rank 5".into())
}

fn element_sets(blocks: &[Vec<usize>]) -> Vec<ElementSet> {
    blocks.iter().map(|b| ElementSet::new(b.iter().copied())).collect()
}

fn ac7() -> Outcome {
    let mut rings = 0;
    for (name, _g, list) in enumerated(24) {
        for a in &list {
            let table = central_characters(a, DEFAULT_CHARACTER_SEED).map_err(|e| format!("{name}: {e}"))?;
            let exact = is_rational(a).unwrap();
            ensure!(exact == is_rational_numeric(&table, 1e-8), "{name}: {:?}", a.canonical_form());
            let closed = rational_closure(a).unwrap().closed;
            ensure!(a.is_primitive() == closed.is_primitive(), "{name}: {:?}", a.canonical_form());
            rings += 1;
        }
    }
    Ok(format!("{rings} central S-rings, zero disagreements"))
}

fn ac8() -> Outcome {
    for p in [3u64, 7, 11, 19, 23] {
        let g = Arc::new(build_cyclic(p as usize).unwrap());
        let x = paley_set(p).unwrap();
        let n = p as usize;
        let y: Vec<usize> = x.iter().map(|a| (n - a) % n).collect();
        ensure!(x.iter().all(|a| !y.contains(&a)) && x.len() + y.len() + 1 == n, "Z{p}: not skew");
        let prod = common::convolve(&g, &common::indicator(n, x.as_slice()), &common::indicator(n, &y));
        let k = x.len() as i64;
        for (e, &coeff) in prod.iter().enumerate() {
            let want = if e == 0 { k } else { (k - 1) / 2 };
            ensure!(coeff == want, "Z{p}: coefficient {coeff} at {e}, want {want}");
        }
        let (a, d) = skew_hadamard_rank3(&g, &x).map_err(|e| e.to_string())?;
        ensure!(a.rank() == 3 && d.verdict == Verdict::Confirmed, "Z{p}: {d:?}");
        if p >= 7 {
            ensure!(a.is_primitive(), "Z{p}: imprimitive");
        }
    }
    Ok("p = 3, 7, 11, 19, 23".into())
}

fn ac9() -> Outcome {
    for (name, primitive) in [("Z3", true), ("S3", true), ("Z2", false)] {
        let g = group_by_name(name, 512).unwrap();
        let (a, _) = build_product_rank3(&g, &g).map_err(|e| e.to_string())?;
        let blocks = a.canonical_form();
        ensure!(a.rank() == 3 && a.is_central(), "{name}x{name}: rank {}", a.rank());
        ensure!(common::is_sring(a.group(), &blocks), "{name}x{name}: oracle rejects");
        ensure!(a.is_primitive() == primitive, "{name}x{name}: primitive {}", a.is_primitive());
    }
    Ok("Z3xZ3 and S3xS3 primitive, Z2xZ2 imprimitive".into())
}

fn ac10() -> Outcome {
    let count = |name: &str| enumerate_central_srings(&named(name), &EnumerationLimits::default()).unwrap().len();
    for (name, want) in [("S3", 2), ("Z4", 3), ("Z2", 1)] {
        ensure!(count(name) == want, "{name}: {} S-rings, want {want}", count(name));
    }
    let mut checked = 0;
    for (name, g) in corpus() {
        if g.class_count() > 6 && name != "D8" && name != "Q8" {
            continue;
        }
        let mut dfs: Vec<_> = enumerate_central_srings(&g, &EnumerationLimits::default())
            .unwrap()
            .iter()
            .map(SRing::canonical_form)
            .collect();
        dfs.sort();
        let oracle = common::central_srings(&g);
        ensure!(dfs == oracle, "{name}: {} vs oracle {}", dfs.len(), oracle.len());
        checked += 1;
    }
    Ok(format!("{checked} groups match the oracle; D8 and Q8 have {} and {}", count("D8"), count("Q8")))
}

fn ac11() -> Outcome {
    let run = |args: &[&str]| {
        let mut out = Vec::new();
        let mut full = vec!["schurring"];
        full.extend_from_slice(args);
        let code = run_with_output(full, &mut out);
        (code, out)
    };
    let mut bytes = 0;
    for suite in ["multiplier", "wielandt", "camina", "separating", "rationality", "all"] {
        let (code, base) = run(&["verify", suite, "--corpus", "builtin", "--seed", "7"]);
        ensure!(code == 0, "{suite} exited {code}");
        for workers in ["1", "2", "5"] {
            let (_, again) = run(&["verify", suite, "--corpus", "builtin", "--seed", "7", "--workers", workers]);
            ensure!(again == base, "{suite} differs with {workers} workers");
        }
        bytes += base.len();
    }
    Ok(format!("6 suites, {bytes} bytes reproduced across worker counts"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("AC-1", "axioms of class algebra and trivial S-ring", 10, ac1),
        ("AC-2", "multipliers permute basic sets and preserve constants", 60, ac2),
        ("AC-3", "class power congruence against exact oracle", 30, ac3),
        ("AC-4", "normal cyclic Sylow implies imprimitive", 120, ac4),
        ("AC-5", "Camina pairs and Camina groups", 300, ac5),
        ("AC-6", "simple group witnesses", 60, ac6),
        ("AC-7", "rationality and primitivity cross-checks", 120, ac7),
        ("AC-8", "Paley skew Hadamard sets", 5, ac8),
        ("AC-9", "rank 3 S-ring over G x G", 10, ac9),
        ("AC-10", "enumeration against brute force", 60, ac10),
        ("AC-11", "deterministic reports", 300, ac11),
    ];
    let mut failed = Vec::new();
    for (id, title, budget, check) in criteria {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(_) => Err("panicked".into()),
        };
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget}s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                println!("[FAIL] {id} {title}: {why} ({elapsed:.2?})");
                failed.push(id);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed: {failed:?}");
        std::process::exit(1);
    }
}
