//! The ten acceptance criteria, run in sequence so that each runtime is measured alone.
//! Every criterion prints one PASS/FAIL line; the test fails if any criterion does.

use rnc_core::arrangements::hilbert::sample_seeds;
use rnc_core::arrangements::rank::{bareiss_rank, modular_rank, peel_unit_rows, random_primes};
use rnc_core::arrangements::{
    condition_matrix, generic_hilbert, hilbert_function, normalizing_projectivity, sample_configuration,
    sample_shape, ComponentShape, Configuration, HilbertOptions, WeightVector,
};
use rnc_core::defectivity::{defect_check, DefectQuery};
use rnc_core::exactgeom::{LinearSubspace, ProjPoint, Projectivity, Rng, Scalar};
use rnc_core::feasibility::{
    atlas_with, build_witness, verify_witness, Certificate, Classifier, ClassifyOptions, Status,
};
use rnc_core::poly::{binomial, HomogeneousForm, MonomialBasis};
use rnc_core::rnc::{
    apply_projectivity, evaluate, intersection_degree, is_rnc, param, restrict_form, rnc_through_points,
    standard_rnc, RationalCurve,
};
use std::io::Write;
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn w(n: usize, counts: Vec<usize>) -> WeightVector {
    WeightVector::new(n, counts).unwrap()
}

fn random_projectivity(n: usize, rng: &mut Rng) -> Projectivity {
    loop {
        if let Ok(g) = Projectivity::new((0..=n).map(|_| rng.vector(n + 1)).collect()) {
            return g;
        }
    }
}

fn shapes(parts: &[(usize, usize, usize)]) -> Vec<ComponentShape> {
    parts
        .iter()
        .flat_map(|&(count, dim, mult)| std::iter::repeat_n(ComponentShape { dim, mult }, count))
        .collect()
}

/// Configurations whose ranks enter the criteria, collected for the modular cross-check.
#[derive(Default)]
struct RankLog {
    instances: Vec<(Configuration, usize)>,
}

fn c1_veronese() -> Outcome {
    for n in 2..=6 {
        for seed in 0..20u64 {
            let mut rng = Rng::new(seed * 100 + n as u64);
            let pts: Vec<ProjPoint> =
                (0..n + 3).map(|_| ProjPoint::new(rng.nonzero_vector(n + 1)).unwrap()).collect();
            let (c, params) = rnc_through_points(&pts).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
            ensure!(is_rnc(&c), "n={n} seed={seed}: not an rnc");
            for (p, a) in pts.iter().zip(&params) {
                ensure!(evaluate(&c, a) == *p, "n={n} seed={seed}: misses a point");
            }
        }
    }
    Ok(())
}

fn c2_codim2() -> Outcome {
    let eng = Classifier::new(ClassifyOptions::default());
    for n in 3..=8 {
        for p in 1..=n + 3 {
            let l = n + 3 - p;
            let mut c = vec![0; n - 1];
            c[0] = p;
            c[n - 2] += l;
            let v = eng.classify(&w(n, c)).map_err(|e| e.to_string())?;
            let listed = [(n + 3, 0), (n + 2, 1), (3, n), (2, n + 1), (1, n + 2)].contains(&(p, l));
            let want = if listed { Status::Feasible } else { Status::NonFeasible };
            ensure!(listed || (p >= 4 && l >= 2), "({p},{l}) is neither listed nor p>=4, l>=2");
            ensure!(v.status == want, "n={n} (p,l)=({p},{l}): got {}, want {want}", v.status);
        }
    }
    Ok(())
}

fn c3_segre_witness() -> Outcome {
    let l = w(5, vec![5, 1, 1, 0]);
    for seed in 0..20u64 {
        let wit = build_witness(&l, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let rep = verify_witness(&wit.curve, &wit.configuration).map_err(|e| e.to_string())?;
        ensure!(rep.ok && rep.is_rnc, "seed {seed}: verification failed");
        let mut by_dim = [0usize; 3];
        for c in &rep.components {
            ensure!(c.got == Some(c.dim + 1), "seed {seed}: component {} degree {:?}", c.index, c.got);
            by_dim[c.dim] += 1;
        }
        ensure!(by_dim == [5, 1, 1], "seed {seed}: components {by_dim:?}");
        for comp in wit.configuration.components() {
            let deg = intersection_degree(&wit.curve, &comp.space).map_err(|e| e.to_string())?;
            ensure!(deg == comp.dim() + 1, "seed {seed}: independent degree check failed");
        }
    }
    Ok(())
}

fn lines_expected(n: usize, l: usize) -> Status {
    if n == 3 {
        return if l <= 6 { Status::Feasible } else { Status::NonFeasible };
    }
    if l <= n / 2 + 2 {
        return Status::Feasible;
    }
    match (n, l) {
        (5, 5) | (7, 6) => Status::Unknown,
        _ => Status::NonFeasible,
    }
}

fn c4_lines() -> Outcome {
    let eng = Classifier::new(ClassifyOptions::default());
    for n in 3..=9 {
        let bound = (n + 3) * (n - 1) / (2 * (n - 2));
        for l in 1..=bound + 1 {
            let mut c = vec![0; n - 1];
            c[1] = l;
            let v = eng.classify(&w(n, c)).map_err(|e| e.to_string())?;
            let want = lines_expected(n, l);
            ensure!(v.status == want, "{l} lines in P^{n}: got {}, want {want}", v.status);
            if (n, l) == (4, 5) {
                let ok = matches!(v.certificate, Certificate::BezoutWitness { d: 2, k: 1, .. });
                ensure!(ok, "(4,5) certificate {}", v.certificate.rule_name());
            }
        }
    }
    Ok(())
}

fn c5_one_each() -> Outcome {
    let eng = Classifier::new(ClassifyOptions::default());
    for n in 2..=9 {
        let l = w(n, vec![1; n - 1]);
        let v = eng.classify(&l).map_err(|e| e.to_string())?;
        let want = match n {
            0..=5 => Status::Feasible,
            6 | 7 => Status::Unknown,
            _ => Status::NonFeasible,
        };
        ensure!(v.status == want, "n={n}: got {}, want {want}", v.status);
    }
    let l = w(5, vec![1; 4]);
    let wit = build_witness(&l, 0).map_err(|e| e.to_string())?;
    ensure!(verify_witness(&wit.curve, &wit.configuration).map_err(|e| e.to_string())?.ok, "n=5 witness");
    Ok(())
}

fn c6_hilbert(log: &mut RankLog) -> Outcome {
    let opts = HilbertOptions::default();
    for n in 4..=8 {
        let want = if n >= 6 { (n * n + 3 * n - 16) / 2 } else { 2 * binomial(n - 1, 2) };
        let shape = shapes(&[(2, n - 3, 1)]);
        let ev = generic_hilbert(n, &shape, 2, 0, &opts).map_err(|e| e.to_string())?;
        ensure!(ev.hf == want && ev.seeds_agreed && ev.exact, "n={n}: {:?}, want {want}", ev.values);
        for s in sample_seeds(0, "hilbert") {
            log.instances.push((sample_shape(n, &shape, &mut Rng::new(s)).unwrap(), 2));
        }
    }
    let ev = generic_hilbert(3, &shapes(&[(2, 1, 1)]), 2, 0, &opts).map_err(|e| e.to_string())?;
    ensure!(ev.hf == 6 && ev.seeds_agreed, "skew lines: {:?}", ev.values);
    // Degree-2 monomials vanishing on {x0=x1=0} ∪ {x2=x3=0} are x_i x_j with i<2<=j.
    let skew = Configuration::reduced(
        3,
        vec![LinearSubspace::coordinate(3, &[2, 3]), LinearSubspace::coordinate(3, &[0, 1])],
    )
    .unwrap();
    let basis = MonomialBasis::new(4, 2);
    let oracle =
        basis.exponents().iter().filter(|e| (e[0] + e[1] == 0) || (e[2] + e[3] == 0)).count();
    ensure!(oracle == 6 && hilbert_function(&skew, 2) == 6, "monomial oracle");
    log.instances.push((skew, 2));
    Ok(())
}

fn c7_three_lines(log: &mut RankLog) -> Outcome {
    let eng = Classifier::new(ClassifyOptions::default());
    for n in 5..=7 {
        let mut c = vec![0; n - 1];
        c[1] = 3;
        c[n - 3] = 2;
        let l = w(n, c);
        let v = eng.classify(&l).map_err(|e| e.to_string())?;
        let Certificate::BezoutWitness { d, k, gamma_index, ref h_lambda, ref h_lambda_prime, ref seeds, .. } =
            v.certificate
        else {
            return Err(format!("n={n}: {} {}", v.status, v.certificate.rule_name()));
        };
        ensure!(v.status == Status::NonFeasible && (d, k) == (2, 1), "n={n}: d={d} k={k}");
        for (j, &s) in seeds.iter().enumerate() {
            let cfg = sample_configuration(&l, &mut Rng::new(s)).unwrap();
            let mut comps = cfg.components().to_vec();
            comps.remove(gamma_index);
            let sub = Configuration::new(n, comps).unwrap();
            ensure!(hilbert_function(&cfg, 2) == h_lambda[j], "n={n}: H(Λ) mismatch");
            ensure!(hilbert_function(&sub, 2) == h_lambda_prime[j], "n={n}: H(Λ') mismatch");
            ensure!(h_lambda[j] == h_lambda_prime[j] + 3, "n={n}: identity");
            log.instances.push((cfg, 2));
            log.instances.push((sub, 2));
        }
    }
    Ok(())
}

fn c8_defectivity(log: &mut RankLog) -> Outcome {
    let opts = HilbertOptions::default();
    let mut queries = vec![];
    for m in 1..=3 {
        queries.push((m, 0));
    }
    for m in 2..=3 {
        for s in m + 2..=2 * m + 1 {
            queries.push((m, s));
        }
    }
    for (m, s) in queries {
        let q = DefectQuery::new(m, s).unwrap();
        let r = defect_check(&q, 0, &opts).map_err(|e| e.to_string())?;
        ensure!(r.seeds_agreed && r.exact, "m={m} s={s}: samples {:?}", r.values);
        if s == 0 {
            ensure!(r.actual == 3 * (m + 1) * (m + 1), "m={m}: dim I_W = {}", r.actual);
        } else {
            ensure!(r.actual as i64 > r.expected, "m={m} s={s}: {} <= {}", r.actual, r.expected);
        }
        for seed in sample_seeds(0, "hilbert") {
            log.instances.push((sample_shape(q.n(), &q.shape(), &mut Rng::new(seed)).unwrap(), 4));
        }
    }
    Ok(())
}

fn c9_properties(log: &RankLog) -> Outcome {
    for (i, (cfg, d)) in log.instances.iter().enumerate() {
        let normalized = cfg.apply(&normalizing_projectivity(cfg));
        let (forced, rest) = peel_unit_rows(condition_matrix(&normalized, *d).rows);
        let exact = bareiss_rank(&rest);
        for p in random_primes(i as u64, 3) {
            ensure!(modular_rank(&rest, p) == exact, "instance {i}: rank mod {p} differs");
        }
        ensure!(forced + exact == hilbert_function(cfg, *d), "instance {i}: rank assembly");
    }
    let mut rng = Rng::new(2024);
    for (cfg, d) in log.instances.iter().filter(|(c, _)| c.n() <= 6).take(12) {
        let base = hilbert_function(cfg, *d);
        for _ in 0..10 {
            let g = random_projectivity(cfg.n(), &mut rng);
            ensure!(hilbert_function(&cfg.apply(&g), *d) == base, "hilbert_function not invariant");
        }
    }
    for n in 3..=5 {
        let c = apply_projectivity(&standard_rnc(n), &random_projectivity(n, &mut rng));
        let rows = vec![evaluate(&c, &param(1, 3)).coords().to_vec(), rng.nonzero_vector(n + 1)];
        let l = LinearSubspace::from_rows(n, rows).unwrap();
        let base = intersection_degree(&c, &l).map_err(|e| e.to_string())?;
        ensure!(base == 1, "secant-free line through a curve point");
        for _ in 0..10 {
            let g = random_projectivity(n, &mut rng);
            let deg = intersection_degree(&apply_projectivity(&c, &g), &g.apply_subspace(&l)).map_err(|e| e.to_string())?;
            ensure!(deg == base, "intersection_degree not invariant");
        }
    }
    let mut rng = Rng::with_height(5, 50);
    for i in 0..100 {
        let n = 2 + i % 4;
        let d = 1 + i % 3;
        let f = HomogeneousForm::from_coeffs(n + 1, d, rng.vector(MonomialBasis::new(n + 1, d).len()));
        let c: RationalCurve = apply_projectivity(&standard_rnc(n), &random_projectivity(n, &mut rng));
        let r = restrict_form(&f, &c);
        ensure!(r.degree() == d * n && !r.is_zero(), "pair {i}: degree {}", r.degree());
        let a = ProjPoint::new(rng.nonzero_vector(2)).unwrap();
        let on_curve: Vec<Scalar> = c.forms().iter().map(|b| b.evaluate(&a)).collect();
        ensure!(r.evaluate(&a) == f.evaluate(&on_curve), "pair {i}: restriction disagrees");
    }
    let eng = Classifier::new(ClassifyOptions::default());
    for n in 3..=5 {
        let a = atlas_with(&eng, n).map_err(|e| e.to_string())?;
        for row in &a.rows {
            let all = eng.all_rules(&row.weight).map_err(|e| e.to_string())?;
            let f = all.iter().any(|x| x.0 == Status::Feasible);
            let nf = all.iter().any(|x| x.0 == Status::NonFeasible);
            ensure!(!(f && nf), "{} in P^{n} gets both verdicts", row.weight);
            ensure!(row.status == Status::Unknown || all.iter().any(|x| x.0 == row.status), "{}", row.weight);
        }
    }
    Ok(())
}

fn c10_determinism() -> Outcome {
    let opts = ClassifyOptions { seed: 42, ..Default::default() };
    let a = atlas_with(&Classifier::new(opts), 4).map_err(|e| e.to_string())?.to_csv();
    let b = atlas_with(&Classifier::new(opts), 4).map_err(|e| e.to_string())?.to_csv();
    ensure!(a.as_bytes() == b.as_bytes(), "CSV differs between runs");
    Ok(())
}

fn report(id: usize, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let outcome = f();
    let elapsed = t.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:.2?}, limit {limit:?}"))
        }
    });
    let line = match &outcome {
        Ok(()) => format!("[PASS] {id:>2} {name} ({elapsed:.2?})"),
        Err(e) => format!("[FAIL] {id:>2} {name} ({elapsed:.2?}): {e}"),
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    outcome.is_ok()
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let mut log = RankLog::default();
    let results = [
        report(1, "Veronese witnesses n=2..6, 20 seeds", secs(5), c1_veronese),
        report(2, "codim-2 table n=3..8", secs(10), c2_codim2),
        report(3, "Segre witness (5,1,1,0) in P^5, 20 seeds", secs(10), c3_segre_witness),
        report(4, "lines table n=3..9", secs(120), c4_lines),
        report(5, "one space of each dimension", secs(60), c5_one_each),
        report(6, "Hilbert identities", secs(30), || c6_hilbert(&mut log)),
        report(7, "three lines and two codim-3 spaces n=5..7", secs(120), || c7_three_lines(&mut log)),
        report(8, "defectivity of P^1 x P^m x P^m", secs(180), || c8_defectivity(&mut log)),
        report(9, "property suites and soundness", secs(120), || c9_properties(&log)),
        report(10, "atlas determinism n=4", secs(60), c10_determinism),
    ];
    let failed: Vec<usize> = (1..=10).filter(|i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
