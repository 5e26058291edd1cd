//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness; exits nonzero on any failure not listed in `KNOWN_FAILURES`.

use std::process::Command;
use std::time::{Duration, Instant};

use design_ideals::combin::Combinations;
use design_ideals::designs::{
    disjoint_triples, fano, intersection_distribution, projective_design, residual_design, Design,
};
use design_ideals::exactla::{
    annihilates_polynomial, delta_vector, elementary_evaluation_matrix, incidence_matrix, rank, rat,
};
use design_ideals::gamma::{
    bound_consistency, certify, check_certificate, coset_basis_rank, gamma1, gamma1_bruteforce,
    gamma2_lower_linearization, reproduce_row, verify_linearization, zero_set_check, CertifyOptions,
    GammaCertificate, TABLE,
};
use design_ideals::poly::{
    elementary_symmetric, gy_generators, jacobian_rank, m12_orbit_generators, octagon_cover,
    octagon_generators, projective_generators, steiner_generators, symbibd_generators, trivial_generators,
    witt22_generators, witt23_generators, witt24_generators, GeneratorSet, MultilinearPoly,
};
use design_ideals::sts::{build_2v32, is_trade, pasch_configurations, pasch_count, sts, Trade};
use design_ideals::witt::{golay_code, witt10, witt11, witt12, witt22, witt23, witt24};
use design_ideals::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// time limits per criterion
const LIMIT_TABLE: Duration = Duration::from_secs(15 * 60);
const LIMIT_RANK: Duration = Duration::from_secs(30);
const LIMIT_LINEARIZATION: Duration = Duration::from_secs(60);
const LIMIT_SWEEP: Duration = Duration::from_secs(20 * 60);
const LIMIT_JACOBIAN: Duration = Duration::from_secs(5);
const LIMIT_TRADES: Duration = Duration::from_secs(60);
const LIMIT_BASES: Duration = Duration::from_secs(60);

const ORACLE_MAX_SUBSETS: u64 = 500;
const JACOBIAN_SAMPLES: usize = 100;
const JACOBIAN_MAX_V: usize = 40;
const TRADE_SAMPLES: usize = 50;

/// Criteria expected to print FAIL. The annihilator check of criterion 9 is
/// stated for `M - I`, but the diagonal of `M` is `C(6,2) = 15`, so only
/// `M - 15I` has eigenvalues 60, 5, -3.
const KNOWN_FAILURES: &[usize] = &[9];

struct Outcome {
    pass: bool,
    detail: String,
    /// False when a part outside the known failure breaks.
    core_ok: bool,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), core_ok: pass }
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t <= limit, format!("{:.1}s of {}s", t.as_secs_f64(), limit.as_secs()))
}

fn ps(points: &[usize]) -> PointSet {
    PointSet::from_points(points.iter().copied())
}

fn one_based(triples: &[[usize; 3]]) -> Vec<PointSet> {
    triples.iter().map(|t| PointSet::from_points(t.map(|p| p - 1))).collect()
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_design-ideals")).arg("reproduce-table").output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let expected = ["(3,3)", "(3,3)", "(2,2)", "(2,2)", "(3,3)", "(3,3)", "(2,2)", "(2,2)"];
    let lines: Vec<&str> = text.lines().collect();
    let matched = lines.len() == 8
        && lines.iter().zip(expected).all(|(l, e)| l.ends_with(" ok") && l.contains(&format!("got {e}")));
    let (fast, time) = within(start, LIMIT_TABLE);
    let ok_rows = lines.iter().filter(|l| l.ends_with(" ok")).count();
    outcome(out.status.success() && matched && fast, format!("{ok_rows}/8 rows match; {time}"))
}

fn criterion2() -> Outcome {
    let we = golay_code().weight_enumerator();
    let d = witt24();
    let target = [(0, 30), (2, 448), (4, 280), (8, 1)];
    let all = d.blocks().iter().all(|b| {
        let dist = intersection_distribution(&d, b).unwrap();
        dist.into_iter().filter(|&(_, n)| n > 0).eq(target)
    });
    outcome(
        we[8] == 759 && all,
        format!("A_8 = {}; intersection numbers (8:1, 4:280, 2:448, 0:30) for all blocks: {all}", we[8]),
    )
}

fn criterion3() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, d, want) in [("witt24", witt24(), 276), ("witt12", witt12().unwrap(), 66)] {
        let start = Instant::now();
        let r = rank(&incidence_matrix(&d, 2).unwrap());
        let (fast, time) = within(start, LIMIT_RANK);
        pass &= r == want && d.num_blocks() >= r && fast;
        parts.push(format!("{name} rank {r} (want {want}, {time})"));
    }
    outcome(pass, parts.join("; "))
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    let mut blocks = one_based(&[[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]);
    blocks.extend(one_based(&[[1, 2, 4], [1, 3, 5], [2, 3, 6]]));
    let seven = Design::new(6, 3, blocks, "seven").unwrap();
    let cert = gamma2_lower_linearization(&seven, 2, Some(&[ps(&[3, 4, 5])])).unwrap();
    let coeffs: Vec<String> =
        cert.iter().flat_map(|c| c.combination.iter().map(|t| t.coeff.clone())).collect();
    let identity = cert.as_ref().is_some_and(|c| verify_linearization(&seven, c).is_ok())
        && coeffs == ["1", "1", "1", "1", "-1", "-1", "-1"];

    let trade = Trade::new(
        one_based(&[[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]),
        one_based(&[[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]]),
    )
    .unwrap();
    let built = build_2v32(&trade, &ps(&[3, 4, 5]), 15, 0).unwrap();
    let opts = CertifyOptions { candidates: Some(vec![built.dropped.clone()]), ..Default::default() };
    let c = certify(&built.design, &opts).unwrap();
    let certified = c.gamma1.value == Some(2)
        && c.gamma2.value == Some(3)
        && c.gamma2.lower.source == "linearization"
        && check_certificate(&c, &built.design, None).unwrap().is_empty();
    let (fast, time) = within(start, LIMIT_LINEARIZATION);
    outcome(
        identity && certified && fast,
        format!(
            "coefficients ({}); 2-(15,3,2) gamma1 {:?} gamma2 {:?}; {time}",
            coeffs.join(","),
            c.gamma1.value,
            c.gamma2.value
        ),
    )
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let f = fano();
    let w10 = witt10();
    let pg24 = projective_design(2, 1, 4).unwrap();
    let pg32 = projective_design(3, 1, 2).unwrap();
    let w12 = witt12().unwrap();
    let octagons = octagon_generators(&w10, &octagon_cover(&w10, 5).unwrap()).unwrap();
    let mut pairs: Vec<(String, Design, GeneratorSet)> = vec![
        ("fano/steiner".into(), f.clone(), steiner_generators(&f, 2).unwrap()),
        ("fano/symbibd".into(), f.clone(), symbibd_generators(&f).unwrap()),
        ("pg(2,4)/projective".into(), pg24.clone(), projective_generators(2, 1, 4).unwrap().1),
        ("pg(3,2) lines/projective".into(), pg32.clone(), projective_generators(3, 1, 2).unwrap().1),
        ("witt24/witt24".into(), witt24(), witt24_generators()),
        ("witt23/witt23".into(), witt23(), witt23_generators()),
        ("witt22/witt22".into(), witt22(), witt22_generators()),
        ("witt12/m12orbit".into(), w12.clone(), m12_orbit_generators()),
        ("witt10/octagon".into(), w10.clone(), octagons),
    ];
    for d in [f, pg24, pg32, witt24(), witt23(), witt22(), w12, witt11().unwrap(), w10, sts(9).unwrap()] {
        let name = format!("{}/gY", d.name());
        let g = gy_generators(&d).unwrap();
        pairs.push((name, d, g));
    }
    let failed: Vec<String> = pairs
        .iter()
        .filter(|(_, d, g)| !zero_set_check(d, g).map(|r| r.is_exact()).unwrap_or(false))
        .map(|(n, _, _)| n.clone())
        .collect();
    let (fast, time) = within(start, LIMIT_SWEEP);
    let detail = if failed.is_empty() {
        format!("{} pairs exact; {time}", pairs.len())
    } else {
        format!("not exact: {}; {time}", failed.join(", "))
    };
    outcome(failed.is_empty() && fast, detail)
}

fn oracle_corpus() -> Vec<Design> {
    let (res, _) = residual_design(&fano(), 0).unwrap();
    let trade = Trade::new(
        one_based(&[[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]),
        one_based(&[[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]]),
    )
    .unwrap();
    let built = build_2v32(&trade, &ps(&[3, 4, 5]), 15, 0).unwrap();
    vec![
        fano(),
        sts(9).unwrap(),
        witt10(),
        witt11().unwrap(),
        disjoint_triples(),
        res,
        projective_design(2, 1, 3).unwrap(),
        built.design,
    ]
}

fn criterion6() -> Outcome {
    let mut checked = Vec::new();
    let mut bad = Vec::new();
    for d in oracle_corpus() {
        if design_ideals::combin::binomial(d.v() as u64, d.k() as u64) > ORACLE_MAX_SUBSETS as u128 {
            continue;
        }
        let g = gamma1(&d).unwrap();
        let oracle = gamma1_bruteforce(&d).unwrap();
        let agree = match g.value {
            Some(s) => oracle == Some(s),
            None => oracle.is_none_or(|s| s >= g.lower && g.upper.is_none_or(|u| s <= u)),
        };
        checked.push(format!("{} {:?}", d.name(), g.value));
        if !agree {
            bad.push(d.name().to_string());
        }
    }
    let detail = format!("{} designs: {}", checked.len(), checked.join(", "));
    outcome(bad.is_empty(), if bad.is_empty() { detail } else { format!("disagree on {}", bad.join(", ")) })
}

fn criterion7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut bad = 0;
    for _ in 0..JACOBIAN_SAMPLES {
        let v = rng.gen_range(2..=JACOBIAN_MAX_V);
        let k = rng.gen_range(1..v);
        let mut pts: Vec<usize> = (0..v).collect();
        for i in 0..k {
            let j = rng.gen_range(i..v);
            pts.swap(i, j);
        }
        let c = PointSet::from_points(pts[..k].iter().copied());
        if jacobian_rank(&trivial_generators(v, k).unwrap(), &c).unwrap() != v {
            bad += 1;
        }
    }
    let (fast, time) = within(start, LIMIT_JACOBIAN);
    outcome(
        bad == 0 && fast,
        format!("{}/{JACOBIAN_SAMPLES} samples full rank; {time}", JACOBIAN_SAMPLES - bad),
    )
}

/// Whether both sides of a trade have the same sum of degree-2 incidence vectors.
fn same_delta_sums(t1: &[PointSet], t2: &[PointSet], v: usize) -> bool {
    let len = design_ideals::exactla::delta_len(v, 2);
    let sum = |blocks: &[PointSet]| {
        let mut acc = vec![rat(0); len];
        for b in blocks {
            for (a, x) in acc.iter_mut().zip(delta_vector(b, v, 2)) {
                *a += x;
            }
        }
        acc
    };
    sum(t1) == sum(t2)
}

fn criterion8() -> Outcome {
    let start = Instant::now();
    let mut harvested = Vec::new();
    let mut per_v = Vec::new();
    for v in [15, 19, 21] {
        let d = sts(v).unwrap();
        let configs = pasch_configurations(&d).unwrap();
        per_v.push(format!("sts({v}) {}", configs.len()));
        for q in configs {
            if harvested.len() == TRADE_SAMPLES {
                break;
            }
            let bs = q.map(|i| &d.blocks()[i]);
            harvested.push((v, Trade::from_pasch(bs).unwrap()));
        }
    }
    let good = harvested
        .iter()
        .filter(|(v, t)| is_trade(t.t1(), t.t2()) && same_delta_sums(t.t1().triples(), t.t2().triples(), *v))
        .count();
    let pg = projective_design(3, 1, 2).unwrap();
    let n = pasch_count(&pg).unwrap();
    let formula = 15 * 14 * 12 / 24;
    let (fast, time) = within(start, LIMIT_TRADES);
    outcome(
        harvested.len() == TRADE_SAMPLES && good == TRADE_SAMPLES && n == formula && fast,
        format!(
            "{good}/{} trades ({}); PG(3,2) Pasch {n} (formula {formula}); {time}",
            harvested.len(),
            per_v.join(", ")
        ),
    )
}

fn criterion9() -> Outcome {
    let start = Instant::now();
    let mut parts: Vec<(String, bool)> = Vec::new();
    let w22 = witt22();
    let polys: Vec<MultilinearPoly> = w22.blocks().iter().map(|b| elementary_symmetric(22, b, 2)).collect();
    let r = coset_basis_rank(&w22, &polys).unwrap();
    parts.push((format!("witt22 x^(B,2) rank {r}"), r == 77));

    let w23 = witt23();
    let pairs: Vec<MultilinearPoly> = Combinations::new(23, 2)
        .map(|p| MultilinearPoly::monomial(23, PointSet::from_points(p), rat(1)))
        .collect();
    let r = coset_basis_rank(&w23, &pairs).unwrap();
    parts.push((format!("witt23 degree-2 rank {r}"), r == 253));

    for d in [
        fano(),
        projective_design(2, 1, 3).unwrap(),
        projective_design(2, 1, 4).unwrap(),
        projective_design(3, 2, 2).unwrap(),
    ] {
        let xs: Vec<MultilinearPoly> = (0..d.v()).map(|i| MultilinearPoly::variable(d.v(), i)).collect();
        let r = coset_basis_rank(&d, &xs).unwrap();
        parts.push((format!("{} x_i rank {r}", d.name()), r == d.v()));
    }

    let m = elementary_evaluation_matrix(&w22, 2).unwrap();
    let shifted = annihilates_polynomial(&m.shift_diagonal(1).unwrap(), &[60, 5, -3]).unwrap();
    parts.push((format!("M-I annihilated by (x-60)(x-5)(x+3): {shifted}"), shifted));
    // the diagonal of M is C(6,2) = 15; the shift that does work
    let fifteen = annihilates_polynomial(&m.shift_diagonal(15).unwrap(), &[60, 5, -3]).unwrap();

    let (fast, time) = within(start, LIMIT_BASES);
    let pass = parts.iter().all(|(_, ok)| *ok) && fast;
    let core_ok = parts[..parts.len() - 1].iter().all(|(_, ok)| *ok) && fast && fifteen;
    let text: Vec<&str> = parts.iter().map(|(s, _)| s.as_str()).collect();
    Outcome { pass, detail: format!("{}; M-15I annihilated: {fifteen}; {time}", text.join("; ")), core_ok }
}

fn corpus_certificates() -> Vec<(String, GammaCertificate)> {
    let mut out: Vec<(String, GammaCertificate)> =
        TABLE.iter().map(|row| (row.key.to_string(), reproduce_row(row.key).unwrap().certificate)).collect();
    let trade = Trade::new(
        one_based(&[[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]),
        one_based(&[[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]]),
    )
    .unwrap();
    let built = build_2v32(&trade, &ps(&[3, 4, 5]), 15, 0).unwrap();
    let opts = CertifyOptions { candidates: Some(vec![built.dropped.clone()]), ..Default::default() };
    out.push(("2v32".into(), certify(&built.design, &opts).unwrap()));
    let mut others = vec![
        fano(),
        disjoint_triples(),
        projective_design(2, 1, 3).unwrap(),
        projective_design(3, 1, 2).unwrap(),
        projective_design(3, 2, 2).unwrap(),
    ];
    for v in [7, 9, 13, 15, 19] {
        others.push(sts(v).unwrap());
    }
    for d in others {
        out.push((d.name().to_string(), certify(&d, &CertifyOptions::default()).unwrap()));
    }
    out
}

fn criterion10() -> Outcome {
    let certs = corpus_certificates();
    let mut problems = Vec::new();
    for (name, c) in &certs {
        for p in bound_consistency(c) {
            problems.push(format!("{name}: {p}"));
        }
        // G0 has degree 2, so gamma2 <= t can only hold for t >= 2
        if c.strength.lambda == 1 && c.gamma2.upper.value > c.strength.t.max(2) {
            problems.push(format!("{name}: gamma2 upper {} exceeds max(t, 2)", c.gamma2.upper.value));
        }
    }
    let value = |key: &str| {
        let c = &certs.iter().find(|(n, _)| n == key).unwrap().1;
        (c.gamma1.value, c.gamma2.value)
    };
    for chain in [["witt24", "witt23", "witt22"], ["witt12", "witt11", "witt10"]] {
        for w in chain.windows(2) {
            let (a, b) = (value(w[0]), value(w[1]));
            if a.0.is_none() || b.0.is_none() || b.0 > a.0 || b.1 > a.1 {
                problems.push(format!("{} -> {} not monotone: {a:?} {b:?}", w[0], w[1]));
            }
        }
    }
    let detail = if problems.is_empty() {
        format!("{} certificates consistent; both Witt chains monotone", certs.len())
    } else {
        problems.join("; ")
    };
    outcome(problems.is_empty(), detail)
}

type Criterion = (usize, &'static str, fn() -> Outcome);

fn main() {
    // `cargo test -- --list` and filters from the harness are not supported; run everything.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [Criterion; 10] = [
        (1, "table reproduction", criterion1),
        (2, "Golay and witt24 structure", criterion2),
        (3, "incidence rank", criterion3),
        (4, "linearization certificate", criterion4),
        (5, "generator-family sweep", criterion5),
        (6, "gamma1 oracle", criterion6),
        (7, "Jacobian rank", criterion7),
        (8, "trades", criterion8),
        (9, "coordinate-ring bases", criterion9),
        (10, "bound consistency", criterion10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, f) in criteria {
        let o = f();
        let known = KNOWN_FAILURES.contains(&n);
        let note = if !o.pass && known { " (known)" } else { "" };
        println!("criterion {n:>2} {} {name}: {}{note}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.core_ok || (!o.pass && !known) {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
