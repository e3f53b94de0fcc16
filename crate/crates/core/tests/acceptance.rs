//! Exit criteria for the crate, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always printed;
//! the process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sostar_core::cli_io::{execute, EdgeSet, Format, RunConfig};
use sostar_core::exactlin::{int, rat};
use sostar_core::weylcoset::{coset_classes, orbit_classes};
use sostar_core::{
    brute_force_group, build_multiplet, coset_reps, weyl_dim, AlgebraTag, Labels, LinForm,
    Multiplet, RootSystemD, Side,
};

type Row = (&'static str, [[i64; 6]; 5], [i64; 6]);

/// The sixteen signature pairs, shorthand expanded by hand: for each name the
/// five labels of the minus vertex as coefficient vectors over (m1..m6), and
/// the vector S with c(minus) = −S/2, c(plus) = +S/2.
#[rustfmt::skip]
const TABLE: [Row; 16] = [
    ("0", [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]], [1, 2, 3, 4, 2, 3]),
    ("a", [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 1], [0, 0, 0, 0, 1, 0]], [1, 2, 3, 4, 2, 1]),
    ("b", [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 1, 1, 0]], [1, 2, 3, 2, 2, 1]),
    ("c", [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 1, 0, 0]], [1, 2, 3, 2, 0, 1]),
    ("c'", [[1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 1, 1, 1, 0]], [1, 2, 1, 2, 2, 1]),
    ("d", [[1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 1], [0, 0, 1, 1, 0, 0]], [1, 2, 1, 2, 0, 1]),
    ("d'", [[1, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1], [0, 1, 1, 1, 1, 0]], [1, 0, 1, 2, 2, 1]),
    ("e", [[1, 0, 0, 0, 0, 0], [0, 1, 1, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 1], [0, 0, 1, 0, 0, 0]], [1, 2, 1, 0, 0, 1]),
    ("e'", [[1, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 1], [0, 1, 1, 1, 0, 0]], [1, 0, 1, 2, 0, 1]),
    ("e''", [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1], [1, 1, 1, 1, 1, 0]], [-1, 0, 1, 2, 2, 1]),
    ("f", [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 1], [0, 1, 1, 0, 0, 0]], [1, 0, 1, 0, 0, 1]),
    ("f'", [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 1], [1, 1, 1, 1, 0, 0]], [-1, 0, 1, 2, 0, 1]),
    ("f''", [[1, 0, 0, 0, 0, 0], [0, 1, 1, 1, 0, 1], [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0], [0, 0, 1, 0, 0, 0]], [1, 2, 1, 0, 0, -1]),
    ("g", [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 1, 1, 0, 1], [0, 1, 0, 0, 0, 0]], [1, 0, -1, 0, 0, 1]),
    ("g'", [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 1], [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0], [0, 1, 1, 0, 0, 0]], [1, 0, 1, 0, 0, -1]),
    ("g''", [[0, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 1], [1, 1, 1, 0, 0, 0]], [-1, 0, 1, 0, 0, 1]),
];

fn form(v: &[i64; 6]) -> LinForm {
    LinForm::new(int(0), v.iter().map(|&c| int(c)).collect())
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn symbolic6() -> Multiplet {
    build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).expect("rank-6 multiplet")
}

fn c1_cardinality() -> Outcome {
    let start = Instant::now();
    let m = symbolic6();
    let elapsed = start.elapsed();
    outcome(
        m.vertices.len() == 32 && elapsed < Duration::from_secs(1),
        format!(
            "{} vertices in {:.3}s (limit 1s)",
            m.vertices.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn c2_golden_table() -> Outcome {
    let m = symbolic6();
    let mut expected = Vec::new();
    for (name, labels, s) in TABLE {
        let ls: Vec<LinForm> = labels.iter().map(form).collect();
        let half = form(&s).scale(&rat(1, 2));
        expected.push((format!("chi_{name}^-"), Side::Minus, ls.clone(), -&half));
        expected.push((
            format!("chi_{name}^+"),
            Side::Plus,
            ls.into_iter().rev().collect::<Vec<_>>(),
            half,
        ));
    }
    let mut used = BTreeSet::new();
    let mut misses = Vec::new();
    for (name, side, ls, c) in &expected {
        match m
            .vertices
            .iter()
            .find(|v| v.signature.labels == *ls && v.signature.c == *c)
        {
            Some(v) if v.side == *side && used.insert(v.id) => {}
            Some(v) => misses.push(format!(
                "{name}: matched vertex {} on wrong side or twice",
                v.id
            )),
            None => misses.push(format!("{name}: no vertex with this signature")),
        }
    }
    for miss in &misses {
        println!("    mismatch {miss}");
    }
    outcome(
        misses.is_empty() && used.len() == 32,
        format!("{}/32 rows match exactly", used.len()),
    )
}

fn c3_knapp_stein() -> Outcome {
    let m = symbolic6();
    let mut ok = m.ks_pairs.len() == 16;
    let mut seen = BTreeSet::new();
    for &(a, b) in &m.ks_pairs {
        let (va, vb) = (&m.vertices[a], &m.vertices[b]);
        ok &= a != b && seen.insert(a) && seen.insert(b);
        ok &= vb.signature.labels == va.signature.conjugate_labels();
        ok &= vb.signature.c == -&va.signature.c;
        ok &= va.side == Side::Minus && vb.side == Side::Plus;
        ok &= m.ks_partner(b) == Some(a);
    }
    ok &= seen.len() == 32;
    outcome(
        ok,
        format!(
            "{} pairs covering {} vertices",
            m.ks_pairs.len(),
            seen.len()
        ),
    )
}

fn c4_oracle_quotient() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2014);
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, order, classes) in [(6usize, 23040usize, 32usize), (4, 192, 8)] {
        let group = brute_force_group(n).expect("oracle");
        let mut pool: Vec<i64> = (0..60).collect();
        pool.shuffle(&mut rng);
        let x: Vec<i64> = pool[..n].to_vec();
        let orbit = orbit_classes(&group, &x);
        let cosets = coset_classes(&coset_reps(n).unwrap(), &x);
        ok &= group.len() == order && orbit.len() == classes && orbit == cosets;
        parts.push(format!(
            "n={n}: |W|={} classes={}",
            group.len(),
            orbit.len()
        ));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    outcome(
        ok,
        format!(
            "{} in {:.2}s (limit 30s)",
            parts.join(", "),
            elapsed.as_secs_f64()
        ),
    )
}

fn c5_arrow_labels() -> Outcome {
    let m = symbolic6();
    let reduced: Vec<_> = m.reduced_edges().collect();
    let simple = reduced
        .iter()
        .filter(|e| e.m.single_indeterminate().is_some() && e.label().is_some())
        .count();
    outcome(
        !reduced.is_empty() && simple == reduced.len(),
        format!(
            "{simple}/{} non-composite arrows are a single m_i",
            reduced.len()
        ),
    )
}

/// ∏_{i<j} (l_i² − l_j²) / (r_i² − r_j²) on doubled ε-coordinates; the scale cancels.
fn epsilon_product_dim(labels: &[u64; 6]) -> BigInt {
    let m: Vec<i64> = labels.iter().map(|&v| v as i64).collect();
    let mut l = [0i64; 6];
    l[5] = m[5] - m[4];
    l[4] = m[4] + m[5];
    for i in (0..4).rev() {
        l[i] = 2 * m[i] + l[i + 1];
    }
    let r: [i64; 6] = [10, 8, 6, 4, 2, 0];
    let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
    for i in 0..6 {
        for j in i + 1..6 {
            num *= BigInt::from(l[i] * l[i] - l[j] * l[j]);
            den *= BigInt::from(r[i] * r[i] - r[j] * r[j]);
        }
    }
    assert_eq!(&num % &den, BigInt::from(0));
    num / den
}

fn c6_endpoint_values() -> Outcome {
    let rs = RootSystemD::build(6).unwrap();
    let m = build_multiplet(6, &Labels::Numeric(vec![1; 6]), AlgebraTag::SoStar).unwrap();
    let chi0 = m.vertex_by_name("chi_0^-").expect("chi_0^- present");
    let d = chi0
        .signature
        .d
        .as_ref()
        .and_then(|d| d.eval_at(&[1; 6]).ok());
    let dim1 = weyl_dim(&rs, &[1; 6]).unwrap();
    let adjoint = weyl_dim(&rs, &[1, 2, 1, 1, 1, 1]).unwrap();
    let so12 = BigInt::from(12 * 11 / 2);
    let ok = d == Some(int(0))
        && chi0.dim_e == Some(BigInt::from(1))
        && dim1 == BigInt::from(1)
        && adjoint == so12
        && epsilon_product_dim(&[1, 2, 1, 1, 1, 1]) == adjoint
        && epsilon_product_dim(&[1; 6]) == dim1;
    outcome(
        ok,
        format!(
            "d(chi_0^-) = {}, dim E = {dim1}, adjoint dim = {adjoint} (dim so(12) = {so12})",
            d.map_or("?".into(), |v| v.to_string())
        ),
    )
}

fn c7_mode_consistency() -> Outcome {
    let sym = symbolic6();
    let mut rng = ChaCha8Rng::seed_from_u64(1207);
    let mut bad = 0;
    for _ in 0..20 {
        let ls: Vec<u64> = (0..6).map(|_| rng.gen_range(1..=9)).collect();
        let num = build_multiplet(6, &Labels::Numeric(ls.clone()), AlgebraTag::SoStar).unwrap();
        for (s, v) in sym.vertices.iter().zip(&num.vertices) {
            let expect = s.signature.eval_at(&ls).unwrap();
            let got = v.signature.eval_at(&ls).unwrap();
            if s.coset != v.coset || expect != got || s.signature.name != v.signature.name {
                bad += 1;
            }
        }
        let arrows = |m: &Multiplet| -> BTreeSet<(usize, usize, bool)> {
            m.edges.iter().map(|e| (e.from, e.to, e.reduced)).collect()
        };
        if arrows(&sym) != arrows(&num) {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!("20 label vectors in [1,9]^6, {bad} discrepancies"),
    )
}

fn c8_determinism() -> Outcome {
    let mut ok = true;
    for format in [Format::Json, Format::Dot] {
        for labels in [Labels::Symbolic, Labels::Numeric(vec![2, 1, 3, 1, 1, 4])] {
            let mut cfg = RunConfig::new(6, labels);
            cfg.format = format;
            cfg.edges = EdgeSet::All;
            let a = execute(&cfg, None).unwrap().output;
            let b = execute(&cfg, None).unwrap().output;
            ok &= !a.is_empty() && a == b;
        }
    }
    outcome(ok, "JSON and DOT outputs byte-identical across runs")
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 multiplet cardinality", c1_cardinality),
        ("2 golden table equivalence", c2_golden_table),
        ("3 Knapp-Stein involution", c3_knapp_stein),
        ("4 oracle quotient", c4_oracle_quotient),
        ("5 arrow-label simplicity", c5_arrow_labels),
        ("6 endpoint values", c6_endpoint_values),
        ("7 mode consistency", c7_mode_consistency),
        ("8 determinism", c8_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!(
            "{} criterion {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.passed {
            failed += 1;
        }
    }
    println!("acceptance: {}/8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
