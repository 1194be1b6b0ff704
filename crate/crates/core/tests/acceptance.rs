//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::Instant;

use coxeter_shuffle::coxeter::{build_group, ConcreteForm, CoxeterGroup, GroupDescriptor};
use coxeter_shuffle::descent_algebra::verify_idempotent_system;
use coxeter_shuffle::gfpoly::{
    count_self_negative_irreducible, irreducibles, self_negative_irreducibles, sl3_remark_counts, type_a_orbit_census,
    type_b_orbit_census,
};
use coxeter_shuffle::markov::spectrum_checks;
use coxeter_shuffle::measures::{
    class_distribution, closed_form, convolve, gsr_shuffle, identity_value, longest_value, measure,
};
use coxeter_shuffle::necklaces::{
    closed_d, closed_p, count_ornaments, enumerate_necklaces, reiner_checks, NecklaceKind,
};
use coxeter_shuffle::rational::{format_q, int, q, Q};
use coxeter_shuffle::Caps;
use num_traits::{One, Zero};
use statrs::distribution::{ChiSquared, ContinuousCDF};

type Outcome = Result<String, String>;

fn descriptors() -> Vec<GroupDescriptor> {
    let mut out: Vec<GroupDescriptor> = (2..=6).map(GroupDescriptor::symmetric).collect();
    out.extend((2..=4).map(GroupDescriptor::b));
    out.push(GroupDescriptor::d(4));
    out.extend((3..=12).map(GroupDescriptor::i2));
    out.push(GroupDescriptor::g2());
    out
}

fn groups() -> Vec<CoxeterGroup> {
    descriptors().into_iter().map(|d| build_group(d).expect("supported group")).collect()
}

fn xs() -> Vec<Q> {
    vec![int(2), int(3), int(5), int(7), q(1, 2), int(-2)]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn c1(gs: &[CoxeterGroup]) -> Outcome {
    for g in gs {
        verify_idempotent_system(g).map_err(|e| format!("{}: {e}", g.descriptor()))?;
    }
    Ok(format!("{} groups", gs.len()))
}

fn c2(gs: &[CoxeterGroup]) -> Outcome {
    for g in gs {
        for x in xs() {
            let total = measure(g, x).map_err(err)?.total();
            ensure(total.is_one(), || format!("{} x={x}: total {total}", g.descriptor()))?;
        }
    }
    Ok(format!("{} groups x 6 parameters", gs.len()))
}

fn c3(gs: &[CoxeterGroup]) -> Outcome {
    let mut checked = 0;
    for g in gs.iter().filter(|g| g.descriptor().family != coxeter_shuffle::coxeter::Family::D) {
        for x in xs() {
            let m = measure(g, x).map_err(err)?;
            for w in 0..g.order() {
                let c = closed_form(g, x, w).map_err(err)?;
                ensure(c == m.coefficient(w), || format!("{} x={x} w={w}: {c} vs {}", g.descriptor(), m.coefficient(w)))?;
                checked += 1;
            }
        }
    }
    let b1 = build_group(GroupDescriptor::b(1)).map_err(err)?;
    ensure(closed_form(&b1, int(3), b1.identity()).map_err(err)? == q(2, 3), || "B1 x=3 id".into())?;
    Ok(format!("{checked} coefficients"))
}

fn c4(gs: &[CoxeterGroup]) -> Outcome {
    for g in gs {
        for x in xs() {
            let m = measure(g, x).map_err(err)?;
            ensure(m.coefficient(g.identity()) == identity_value(g, x), || format!("{} x={x} id", g.descriptor()))?;
            ensure(m.coefficient(g.longest_element()) == longest_value(g, x), || format!("{} x={x} w0", g.descriptor()))?;
        }
    }
    Ok(format!("{} groups", gs.len()))
}

fn c5(gs: &[CoxeterGroup]) -> Outcome {
    for g in gs {
        for (x, y) in [(int(2), int(3)), (int(3), int(5)), (int(2), q(1, 2))] {
            let prod = convolve(&measure(g, x).map_err(err)?, &measure(g, y).map_err(err)?).map_err(err)?;
            ensure(prod == measure(g, x * y).map_err(err)?, || format!("{} ({x},{y})", g.descriptor()))?;
        }
    }
    Ok(format!("{} groups x 3 pairs", gs.len()))
}

fn c6(gs: &[CoxeterGroup]) -> Outcome {
    let mut count = 0;
    for g in gs.iter().filter(|g| g.order() <= 1000) {
        for x in [int(2), int(3)] {
            let report = spectrum_checks(g, x).map_err(err)?;
            if let Some(c) = report.checks.first_failure() {
                return Err(format!("{} x={x}: {}", g.descriptor(), c.name));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (group, x) cases"))
}

fn c7() -> Outcome {
    let caps = Caps::default();
    for (n, qq) in [(2, 3), (3, 5), (3, 7), (4, 7), (5, 7)] {
        let g = build_group(GroupDescriptor::symmetric(n)).map_err(err)?;
        let expected = class_distribution(&g, &measure(&g, int(qq as i128)).map_err(err)?);
        let got = type_a_orbit_census(n, qq, &caps).map_err(err)?.distribution();
        ensure(got.agrees_with(&expected), || format!("S{n} q={qq}: {got} vs {expected}"))?;
    }
    Ok("5 (n, q) pairs".into())
}

fn c8() -> Outcome {
    let caps = Caps::default();
    for (n, qq) in [(1, 3), (2, 3), (2, 5), (3, 5), (3, 7)] {
        let g = build_group(GroupDescriptor::b(n)).map_err(err)?;
        let expected = class_distribution(&g, &measure(&g, int(qq as i128)).map_err(err)?);
        let got = type_b_orbit_census(n, qq, &caps).map_err(err)?.distribution();
        ensure(got.agrees_with(&expected), || format!("B{n} q={qq}: {got} vs {expected}"))?;
    }
    Ok("5 (n, q) pairs".into())
}

fn lehrer(desc: GroupDescriptor, qq: u32) -> Q {
    let e = desc.exponents();
    let num: Q = e.iter().map(|&m| int((qq + m) as i128)).product();
    let den: Q = e.iter().map(|&m| int(1 + m as i128)).product();
    num / den
}

fn c9() -> Outcome {
    let caps = Caps::default();
    let mut notes = Vec::new();
    for (n, qq) in [(2, 3), (3, 5), (3, 7), (4, 7), (5, 7)] {
        let census = type_a_orbit_census(n, qq, &caps).map_err(err)?;
        let g = build_group(GroupDescriptor::symmetric(n)).map_err(err)?;
        let label = g.class_labels()[g.conjugacy_class_of(g.identity())].clone();
        let got = int(census.count(&label) as i128);
        let want = lehrer(GroupDescriptor::symmetric(n), qq);
        ensure(got == want, || format!("S{n} q={qq}: {got} vs {want}"))?;
        if (n, qq) == (3, 7) {
            notes.push(format!("S3 q=7: {got} of {}", census.total));
        }
    }
    for (n, qq) in [(1, 3), (2, 3), (2, 5), (3, 5), (3, 7)] {
        let census = type_b_orbit_census(n, qq, &caps).map_err(err)?;
        let g = build_group(GroupDescriptor::b(n)).map_err(err)?;
        let label = g.class_labels()[g.conjugacy_class_of(g.identity())].clone();
        let got = int(census.count(&label) as i128);
        let want = lehrer(GroupDescriptor::b(n), qq);
        ensure(got == want, || format!("B{n} q={qq}: {got} vs {want}"))?;
    }
    Ok(notes.join(", "))
}

fn c10() -> Outcome {
    for qq in [1u32, 3, 5, 7] {
        for m in 1..=4usize {
            let s = (qq - 1) / 2;
            let d = enumerate_necklaces(NecklaceKind::Blinking, s, m).map_err(err)?;
            let p = enumerate_necklaces(NecklaceKind::Twisted, s, m).map_err(err)?;
            let (cd, cp) = (closed_d(qq as u64, m as u32).map_err(err)?, closed_p(qq as u64, m as u32).map_err(err)?);
            ensure(d == cd && p == cp, || format!("q={qq} m={m}: D {d} vs {cd}, P {p} vs {cp}"))?;
        }
    }
    Ok("q in {1,3,5,7}, m <= 4; blinking m=1 row is (q+1)/2".into())
}

fn c11() -> Outcome {
    for qq in [3u32, 5, 7] {
        for m in 1..=3u32 {
            let brute = self_negative_irreducibles(qq, 2 * m as usize).map_err(err)?.len() as u128;
            let formula = count_self_negative_irreducible(qq as u64, 2 * m);
            let p = closed_p(qq as u64, m).map_err(err)?;
            ensure(brute == formula && formula == p, || format!("q={qq} m={m}: {brute}, {formula}, P={p}"))?;
        }
        for d in [1usize, 3] {
            let odd = irreducibles(qq, d).map_err(err)?.into_iter().filter(|f| f.is_even()).count();
            ensure(odd == 0 && count_self_negative_irreducible(qq as u64, d as u32) == 0, || {
                format!("q={qq} odd degree {d}: {odd}")
            })?;
        }
    }
    Ok("q in {3,5,7}, m <= 3".into())
}

fn c12() -> Outcome {
    let caps = Caps::default();
    for qq in [3u32, 5] {
        for n in 1..=4usize {
            let total = count_ornaments(n, qq).map_err(err)?;
            ensure(total == (qq as u128).pow(n as u32), || format!("n={n} q={qq}: {total} ornaments"))?;
            let report = reiner_checks(n, qq, &caps).map_err(err)?;
            if let Some(c) = report.first_failure() {
                return Err(format!("n={n} q={qq}: {}", c.name));
            }
        }
    }
    Ok("q in {3,5}, n <= 4".into())
}

fn c13() -> Outcome {
    let (enumerated, predicted) = sl3_remark_counts().map_err(err)?;
    ensure((enumerated, predicted) == (5, 7), || format!("got ({enumerated}, {predicted})"))?;
    Ok("(5, 7)".into())
}

fn c14() -> Outcome {
    let caps = Caps::default();
    let mut descs: Vec<GroupDescriptor> = (1..=caps.max_rank_a).map(GroupDescriptor::a).collect();
    descs.extend((1..=caps.max_rank_b).map(GroupDescriptor::b));
    for desc in descs {
        let g = build_group(desc).map_err(err)?;
        for qq in [3, 5, 7] {
            ensure(measure(&g, int(qq)).map_err(err)?.is_nonnegative(), || format!("{desc} q={qq}"))?;
        }
    }
    let d4 = build_group(GroupDescriptor::d(4)).map_err(err)?;
    let d4_notes: Vec<String> = [3, 5, 7]
        .iter()
        .map(|&qq| {
            let m = measure(&d4, int(qq)).expect("D4 measure");
            let min = m.coefficients().iter().min().copied().unwrap_or_else(Q::zero);
            format!("q={qq} {} (min {})", if m.is_nonnegative() { "nonnegative" } else { "signed" }, format_q(&min))
        })
        .collect();
    Ok(format!("A1..A{}, B1..B{}; D4 informational: {}", caps.max_rank_a, caps.max_rank_b, d4_notes.join(", ")))
}

fn c15() -> Outcome {
    let s4 = build_group(GroupDescriptor::symmetric(4)).map_err(err)?;
    let m = measure(&s4, int(2)).map_err(err)?;
    let samples = 100_000;
    let draws = gsr_shuffle(4, 2, 20240611, samples).map_err(err)?;
    let mut counts = vec![0u64; s4.order()];
    for perm in draws {
        let form = ConcreteForm::Signed(perm.iter().map(|&c| c as i8).collect());
        counts[s4.index_of(&form).ok_or("sample is not a permutation")?] += 1;
    }
    let mut stat = 0.0;
    let mut cells = 0;
    for (w, &observed) in counts.iter().enumerate() {
        let p = m.coefficient(w);
        if p.is_zero() {
            ensure(observed == 0, || format!("{observed} samples on a null cell"))?;
            continue;
        }
        let expected = samples as f64 * (*p.numer() as f64 / *p.denom() as f64);
        stat += (observed as f64 - expected).powi(2) / expected;
        cells += 1;
    }
    let df = (cells - 1) as f64;
    let p_value = ChiSquared::new(df).map_err(err)?.sf(stat);
    ensure(p_value > 1e-3, || format!("chi2={stat:.3}, df={df}, p={p_value:.2e}"))?;
    Ok(format!("chi2={stat:.3}, df={df}, p={p_value:.3}"))
}

fn main() {
    let start = Instant::now();
    let gs = groups();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("idempotent system", Box::new(|| c1(&gs))),
        ("measure sums to 1", Box::new(|| c2(&gs))),
        ("closed forms match construction", Box::new(|| c3(&gs))),
        ("identity and longest-element values", Box::new(|| c4(&gs))),
        ("convolution M_x M_y = M_xy", Box::new(|| c5(&gs))),
        ("spectrum of the random walk", Box::new(|| c6(&gs))),
        ("type A orbits match class distribution", Box::new(c7)),
        ("type B orbits match class distribution", Box::new(c8)),
        ("identity-class counts", Box::new(c9)),
        ("necklace closed forms", Box::new(c10)),
        ("self-negative irreducible counts", Box::new(c11)),
        ("signed ornament counts", Box::new(c12)),
        ("sl3 counterexample counts", Box::new(c13)),
        ("positivity at q = 3, 5, 7", Box::new(c14)),
        ("inverse riffle shuffle chi-square", Box::new(c15)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{detail}] ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{detail}] ({secs:.1}s)", i + 1)
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed ({:.1}s)",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
