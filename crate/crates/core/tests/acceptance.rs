//! Acceptance gate. Runs every criterion at its pinned bound and tolerance,
//! prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use numset::enumerate::{
    numerical_sets, semigroups_with_frobenius, semigroups_with_genus, shape_census,
};
use numset::verify::{run, Statement};
use numset::{NumericalSet, SweepOptions};

/// Paper value of the limiting share of sets with no small associated elements.
const GAMMA: f64 = 0.48;
const GAMMA_BAND: f64 = 0.02;

fn threads() -> usize {
    std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .max(4)
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn sweep(statement: Statement, bound: u32) -> Result<u64, String> {
    let report =
        run(statement, bound, &SweepOptions::with_threads(threads())).map_err(|e| e.to_string())?;
    ensure(report.passed(), || {
        format!(
            "{statement} up to F={bound}: {} counterexamples, first {:?}",
            report.counterexamples.len(),
            report.counterexamples.first()
        )
    })?;
    ensure(report.instances_checked > 0, || {
        format!("{statement}: empty domain")
    })?;
    Ok(report.instances_checked)
}

fn worked_example() -> Outcome {
    let started = Instant::now();
    let s: NumericalSet = "0,2,4,7,8,10,12->".parse().map_err(|e| format!("{e}"))?;
    let complement = s.complement().map_err(|e| e.to_string())?;
    let diagram = s.diagram();
    let hooks = diagram.hooks();
    let c1 = diagram.c1();
    let complement_diagram = diagram.complement();
    let elapsed = started.elapsed();

    let expected_hooks: Vec<Vec<u32>> = vec![
        vec![11, 9, 7, 4, 3, 1],
        vec![9, 7, 5, 2, 1],
        vec![6, 4, 2],
        vec![5, 3, 1],
        vec![3, 1],
        vec![1],
    ];
    ensure(complement.to_string() == "0,2,3,6,8,10->", || {
        format!("complement {complement}")
    })?;
    ensure(diagram.rows() == [6, 5, 3, 3, 2, 1], || {
        format!("diagram {:?}", diagram.rows())
    })?;
    ensure(hooks.rows() == expected_hooks.as_slice(), || {
        format!("hooks {:?}", hooks.rows())
    })?;
    ensure(c1 == 5, || format!("c1 = {c1}"))?;
    ensure(complement_diagram.rows() == [5, 4, 3, 3, 1], || {
        format!("complement diagram {:?}", complement_diagram.rows())
    })?;
    ensure(complement_diagram.to_set() == complement, || {
        "diagram path disagrees".into()
    })?;
    within(Duration::from_millis(1), elapsed)?;
    Ok(format!("{elapsed:?}"))
}

fn dual_path() -> Outcome {
    let started = Instant::now();
    let checked = sweep(Statement::DualPathComplement, 14)?;
    let f14 = numerical_sets(14)
        .filter(|s| s.complement().ok() != s.complement_via_diagram().ok())
        .count();
    ensure(f14 == 0, || format!("{f14} mismatches at F=14"))?;
    let elapsed = started.elapsed();
    within(Duration::from_secs(10), elapsed)?;
    Ok(format!("{checked} sets, {elapsed:?}"))
}

fn complement_scalars() -> Outcome {
    let started = Instant::now();
    let checked = sweep(Statement::ComplementScalars, 16)?;
    let elapsed = started.elapsed();
    within(Duration::from_secs(60), elapsed)?;
    Ok(format!("{checked} sets, {elapsed:?}"))
}

fn hook_gaps() -> Outcome {
    let checked = sweep(Statement::HookGaps, 14)?;
    Ok(format!("{checked} sets"))
}

fn semigroup_complements() -> Outcome {
    let checked = sweep(Statement::SemigroupComplementCharacterization, 10)?;
    Ok(format!("{checked} sets"))
}

fn atom_statements() -> Outcome {
    let started = Instant::now();
    let thm3 = sweep(Statement::ComplementAtomBound, 18)?;
    let thm4 = sweep(Statement::AssociatedAtomBound, 16)?;
    let cor = sweep(Statement::ComplementClosureCriterion, 18)?;
    let elapsed = started.elapsed();
    within(Duration::from_secs(300), elapsed)?;
    Ok(format!(
        "{thm3} semigroups / {thm4} sets / {cor} semigroups, {elapsed:?}"
    ))
}

fn sequence_statements() -> Outcome {
    let counts = [
        sweep(Statement::CornerDecrement, 14)?,
        sweep(Statement::SequenceLength, 14)?,
        sweep(Statement::DoubleComplementAssociated, 14)?,
        sweep(Statement::DoubleComplementClosure, 16)?,
        sweep(Statement::MaxEmbeddingDoubleComplement, 16)?,
        sweep(Statement::LiftRoundTrip, 12)?,
    ];
    Ok(format!("instances {counts:?}"))
}

fn density() -> Outcome {
    let census =
        shape_census(20, &SweepOptions::with_threads(threads())).map_err(|e| e.to_string())?;
    ensure(census.total_sets == 1 << 19, || {
        format!("{} sets at f=20", census.total_sets)
    })?;
    let gamma = census.ratio_gamma();
    ensure((gamma - GAMMA).abs() <= GAMMA_BAND, || {
        format!("ratio_gamma(20) = {gamma}")
    })?;

    let parallel =
        shape_census(24, &SweepOptions::with_threads(threads())).map_err(|e| e.to_string())?;
    within(Duration::from_secs(300), parallel.wall_time)?;
    let sequential = shape_census(24, &SweepOptions::sequential()).map_err(|e| e.to_string())?;
    ensure(parallel.same_counts(&sequential), || {
        "parallel and sequential f=24 counts differ".into()
    })?;
    ensure(parallel.class_total() == 1 << 23, || {
        "f=24 classes do not partition".into()
    })?;
    Ok(format!(
        "ratio_gamma(20) = {gamma:.6}, ratio_gamma(24) = {:.6}, f=24 in {:?} on {} threads",
        parallel.ratio_gamma(),
        parallel.wall_time,
        threads()
    ))
}

fn enumeration() -> Outcome {
    for f in 1..=16 {
        let distinct: HashSet<NumericalSet> = numerical_sets(f).collect();
        ensure(distinct.len() as u64 == 1 << (f - 1), || {
            format!("f={f}: {} sets", distinct.len())
        })?;
        ensure(distinct.iter().all(|s| s.frobenius() == Some(f)), || {
            format!("f={f}: wrong F")
        })?;
    }
    for f in 1..=16 {
        let mut fast = semigroups_with_frobenius(f);
        fast.sort();
        let mut filtered: Vec<_> = numerical_sets(f)
            .filter(NumericalSet::is_semigroup)
            .collect();
        filtered.sort();
        ensure(fast == filtered, || {
            format!("semigroups with F={f} disagree")
        })?;
    }
    for g in 0..=12 {
        let by_genus = semigroups_with_genus(g);
        let mut filtered = sets_of_genus(g);
        filtered.retain(NumericalSet::is_semigroup);
        filtered.sort();
        ensure(by_genus == filtered, || {
            format!("semigroups of genus {g} disagree")
        })?;
    }
    Ok("f <= 16, g <= 12".into())
}

/// Every numerical set of genus `g` with `F ≤ 2g - 1`, the bound for
/// semigroups. Genus is `f - popcount(mask)`, so masks are screened first.
fn sets_of_genus(g: u32) -> Vec<NumericalSet> {
    if g == 0 {
        return vec![NumericalSet::naturals()];
    }
    (1..2 * g)
        .flat_map(|f| {
            (0..1u64 << (f - 1))
                .filter(move |m| f - m.count_ones() == g)
                .map(move |m| NumericalSet::from_small_mask(f, m))
        })
        .collect()
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked example fidelity", worked_example),
        ("dual-path complement, F <= 14", dual_path),
        ("complement scalar identities, F <= 16", complement_scalars),
        ("hook lengths are associated gaps, F <= 14", hook_gaps),
        (
            "semigroup complement characterization, F(T) <= 10",
            semigroup_complements,
        ),
        ("small atom statements, F <= 18 / 16 / 18", atom_statements),
        ("complement sequence statements", sequence_statements),
        ("density reproduction at f = 20 and f = 24", density),
        ("enumeration sanity", enumeration),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let started = Instant::now();
        match criterion() {
            Ok(detail) => println!("PASS {} {name}: {detail} [{:?}]", i + 1, started.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{:?}]", i + 1, started.elapsed());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
