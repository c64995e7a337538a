//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p lr3-core --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lr3_core::chamber::{ChamberComplex, LrPoint, NUM_CHAMBERS};
use lr3_core::classical::{duality_image, s3_images, triples_up_to};
use lr3_core::lift::{certify_symmetry, full_symmetry_group, known_symmetries, lift};
use lr3_core::ray_symmetry::{
    block_stabilizer, generators, orbit, ray_symmetry_group, verify_relations,
};
use lr3_core::{check_gl3_generator, load_complex, ChamberId, LinearSymmetry, PermGroup};
use rayon::prelude::*;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn complex() -> &'static ChamberComplex {
    ChamberComplex::standard()
}

fn group_order() -> Outcome {
    let g = full_symmetry_group(complex()).map_err(|e| e.to_string())?;
    let valid = g
        .elements
        .iter()
        .filter(|e| e.certificate.is_valid())
        .count();
    ensure(
        g.elements.len() == 144,
        format!("order {}", g.elements.len()),
    )?;
    ensure(valid == 144, format!("{valid}/144 certificates valid"))?;
    Ok(format!(
        "order {}, {valid} valid certificates",
        g.elements.len()
    ))
}

fn transitivity() -> Outcome {
    let g = full_symmetry_group(complex()).map_err(|e| e.to_string())?;
    let maps: Vec<_> = g
        .elements
        .iter()
        .map(|e| &e.certificate.chamber_permutation)
        .collect();
    let reached = orbit(maps, ChamberId(0), |m, c| m.apply(*c));
    ensure(
        reached.len() == NUM_CHAMBERS,
        format!("orbit of k1 has {} chambers", reached.len()),
    )?;
    Ok(format!(
        "orbit of k1 = {}/{NUM_CHAMBERS} chambers",
        reached.len()
    ))
}

fn new_symmetry_x() -> Outcome {
    let lifted = lift(&generators::x(), complex()).map_err(|e| e.to_string())?;
    let expected = LinearSymmetry::from_coordinate_map(|p| {
        let [l1, l2, m1, m2, n1, n2] = p.0;
        LrPoint([l1 + m1 - n2, l2 + m1 - n2, n2, m2, n1, m1])
    })
    .map_err(|e| e.to_string())?;
    ensure(
        lifted.matrix() == expected.matrix(),
        format!("lift(x) = {lifted}"),
    )?;
    ensure(
        lifted == known_symmetries().x,
        "lift(x) differs from the stored X",
    )?;
    let cert = certify_symmetry(&lifted, complex()).map_err(|e| e.to_string())?;
    ensure(cert.is_valid(), "certificate invalid")?;
    Ok(format!(
        "lift(x) matches coefficientwise, {}/{NUM_CHAMBERS} identities",
        cert.passed()
    ))
}

fn known_subgroup() -> Outcome {
    let lifts = [generators::s(), generators::t(), generators::u()]
        .iter()
        .map(|p| lift(p, complex()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let order = PermGroup::generate(LinearSymmetry::identity(), &lifts).order();
    ensure(order == 12, format!("order {order}"))?;
    Ok(format!("<S,T,U> has order {order}"))
}

fn ray_structure() -> Outcome {
    let auts: BTreeSet<_> = ray_symmetry_group(complex())
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    let stab = block_stabilizer();
    ensure(
        auts == stab,
        format!(
            "{} automorphisms vs {} stabilizer elements",
            auts.len(),
            stab.len()
        ),
    )?;
    ensure(auts.len() == 144, format!("{} elements", auts.len()))?;
    Ok(format!(
        "automorphisms = stabilizer, {} elements",
        auts.len()
    ))
}

fn relations() -> Outcome {
    let report = verify_relations();
    for c in &report.checks {
        ensure(c.left_to_right, format!("{} fails", c.relation))?;
    }
    let names: Vec<_> = report.checks.iter().map(|c| c.relation.as_str()).collect();
    Ok(names.join(", "))
}

fn oracle_equivalence() -> Outcome {
    let r = complex().cross_validate(6);
    ensure(
        r.points_checked == 117_649,
        format!("{} points", r.points_checked),
    )?;
    ensure(r.is_clean(), format!("{} mismatches", r.mismatches.len()))?;
    Ok(format!(
        "{} points, {} mismatches",
        r.points_checked,
        r.mismatches.len()
    ))
}

fn numerical_sweep() -> Outcome {
    let cx = complex();
    let g = full_symmetry_group(cx).map_err(|e| e.to_string())?;
    let values: Vec<(LrPoint, u64)> = (0..5i64.pow(6))
        .map(|mut code| {
            let mut c = [0i64; 6];
            for x in c.iter_mut() {
                *x = code % 5;
                code /= 5;
            }
            let p = LrPoint(c);
            (p, cx.evaluate(p))
        })
        .collect();
    let maps: Vec<_> = g.maps().collect();
    let failures: usize = maps
        .par_iter()
        .map(|f| {
            values
                .iter()
                .filter(|(p, v)| cx.try_evaluate(f.apply(*p)).ok() != Some(*v))
                .count()
        })
        .sum();
    let checked = maps.len() * values.len();
    ensure(
        failures == 0,
        format!("{failures} of {checked} checks fail"),
    )?;
    Ok(format!(
        "{} maps x {} points, 0 failures",
        maps.len(),
        values.len()
    ))
}

fn classical_identities() -> Outcome {
    let triples = triples_up_to(4);
    let failures: usize = triples
        .par_iter()
        .map(|t| {
            let c = t.coefficient();
            let bad = s3_images(t).iter().filter(|i| i.coefficient() != c).count();
            bad + usize::from(duality_image(t).coefficient() != c)
        })
        .sum();
    ensure(failures == 0, format!("{failures} identities fail"))?;
    Ok(format!("{} triples x 7 identities", triples.len()))
}

fn gl3_generator() -> Outcome {
    let r = check_gl3_generator(5);
    ensure(r.is_clean(), format!("{} mismatches", r.mismatches.len()))?;
    Ok(format!(
        "{} triples ({} nonzero), {} mismatches",
        r.triples_checked,
        r.nonzero,
        r.mismatches.len()
    ))
}

fn data_integrity() -> Outcome {
    let cx = load_complex().map_err(|e| e.to_string())?;
    Ok(format!(
        "{} rays, {} chambers",
        cx.ray_vectors().len(),
        cx.chambers().len()
    ))
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "group order",
        limit: Duration::from_secs(10),
        run: group_order,
    },
    Criterion {
        id: 2,
        name: "transitivity",
        limit: Duration::from_secs(1),
        run: transitivity,
    },
    Criterion {
        id: 3,
        name: "new symmetry X",
        limit: Duration::from_secs(1),
        run: new_symmetry_x,
    },
    Criterion {
        id: 4,
        name: "known subgroup",
        limit: Duration::from_secs(1),
        run: known_subgroup,
    },
    Criterion {
        id: 5,
        name: "ray symmetry structure",
        limit: Duration::from_secs(5),
        run: ray_structure,
    },
    Criterion {
        id: 6,
        name: "relations",
        limit: Duration::from_secs(1),
        run: relations,
    },
    Criterion {
        id: 7,
        name: "oracle equivalence",
        limit: Duration::from_secs(60),
        run: oracle_equivalence,
    },
    Criterion {
        id: 8,
        name: "numerical symmetry sweep",
        limit: Duration::from_secs(120),
        run: numerical_sweep,
    },
    Criterion {
        id: 9,
        name: "classical identities",
        limit: Duration::from_secs(60),
        run: classical_identities,
    },
    Criterion {
        id: 10,
        name: "GL3 generator",
        limit: Duration::from_secs(60),
        run: gl3_generator,
    },
    Criterion {
        id: 11,
        name: "chamber data integrity",
        limit: Duration::from_secs(1),
        run: data_integrity,
    },
];

fn main() -> ExitCode {
    // The standard complex is shared; build it before any timer starts.
    let _ = complex();
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= c.limit {
                Ok(msg)
            } else {
                Err(format!("{msg}; over the {:?} limit", c.limit))
            }
        });
        let (tag, msg) = match outcome {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!(
            "{tag} [{:>2}] {:<24} {:>9.3}s  {msg}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
