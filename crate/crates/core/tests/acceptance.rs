//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so
//! the lines always reach stdout; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tclink::alexander::alexander_polynomial;
use tclink::artin::{artin_apply, parse_free_word, FreeWord};
use tclink::braid::{parse_braid, BraidWord};
use tclink::cable::{cable_lift, n_prime_sigma1};
use tclink::cocycle::{
    boltzmann_weight, cocycle_invariant, mirror_chart, mochizuki_theta, triple_points, GroupRingElement,
};
use tclink::garside::{garside_delta, normal_form};
use tclink::movie::{slide_movie, ChartMovie};
use tclink::presentation::{abelianization, quotient_by_center, torus_covering_group, AbelianInvariants, CommutationPolicy};
use tclink::quandle::{colors_used, torus_colorings, Quandle};
use tclink::ribbon::{ribbon_verdict, verify_decomposition, CableDecomposition, RibbonVerdict};

type Criterion = fn() -> Result<String, String>;

const SEED: u64 = 0x7c1_2024;

fn thm_pair() -> (BraidWord, BraidWord) {
    (parse_braid("1 2 2 2 3", 4).unwrap(), parse_braid("(1 2 3)^4", 4).unwrap())
}

fn delta_power(k: i64) -> BraidWord {
    garside_delta(4).unwrap().pow(k)
}

fn sigma13() -> BraidWord {
    parse_braid("1 3", 4).unwrap()
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn c1() -> Result<String, String> {
    let (a, b) = thm_pair();
    let start = Instant::now();
    let phi = cocycle_invariant(&a, &b, None).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    check(phi == GroupRingElement([3, 0, 6]), &format!("got {phi}"))?;
    check(took < Duration::from_secs(5), &format!("took {took:?}"))?;
    Ok(format!("{phi} in {:.3}s", took.as_secs_f64()))
}

fn c2() -> Result<String, String> {
    let (a, b) = thm_pair();
    let (ma, mb) = mirror_chart(&a, &b);
    let phi = cocycle_invariant(&ma, &mb, None).map_err(|e| e.to_string())?;
    check(phi == GroupRingElement([3, 6, 0]), &format!("got {phi}"))?;
    Ok(format!("{phi}"))
}

fn c3() -> Result<String, String> {
    let (a, b) = thm_pair();
    let q = Quandle::dihedral(3).unwrap();
    let cs = torus_colorings(&a, &b, &q).map_err(|e| e.to_string())?;
    let mut constant = 0;
    let mut three = 0;
    for c in &cs {
        let used = colors_used(&a, &b, &q, c).map_err(|e| e.to_string())?;
        match used.len() {
            1 => constant += 1,
            3 => three += 1,
            _ => return Err(format!("colouring {c:?} uses {used:?}")),
        }
    }
    check(cs.len() == 9 && constant == 3 && three == 6, &format!("{} total, {constant} constant, {three} three-colour", cs.len()))?;
    Ok(format!("{} colourings: {three} with three colours, {constant} constant", cs.len()))
}

/// The 5×4 table of signed coloured triple points, in terms of a, b, c.
fn displayed_triples(a: u32, b: u32, c: u32) -> Vec<(i8, [u32; 3])> {
    let mut v = vec![
        (1, [a, a, c]), (1, [b, b, c]), (-1, [c, a, a]), (-1, [c, a, a]),
        (-1, [a, a, c]), (1, [c, b, c]), (1, [c, a, a]), (-1, [b, a, c]),
        (-1, [a, c, b]), (1, [b, a, c]), (1, [a, b, a]), (-1, [b, c, b]),
        (-1, [a, b, a]), (1, [a, c, c]), (1, [b, c, a]), (-1, [b, b, a]),
        (-1, [a, c, c]), (-1, [a, c, c]), (1, [c, c, a]), (1, [b, b, a]),
    ];
    v.sort();
    v
}

fn c4() -> Result<String, String> {
    let (a, b) = thm_pair();
    let q = Quandle::dihedral(3).unwrap();
    let mv = slide_movie(&a, &b).map_err(|e| e.to_string())?;
    check(mv.r3_count() == 20, &format!("{} R3 steps", mv.r3_count()))?;
    let (ca, cb, cc) = (0u32, 1u32, 2u32);
    // strand colours (a, a, c, c) at the base point
    let coloring = [ca, ca, cc, cc];
    let tp = triple_points(&mv, &coloring, &q).map_err(|e| e.to_string())?;
    let w = boltzmann_weight(&tp);
    let formula = (mochizuki_theta(cc, cb, cc) as i64 - mochizuki_theta(ca, cc, cb) as i64
        - mochizuki_theta(cb, cc, cb) as i64
        + mochizuki_theta(cb, cc, ca) as i64)
        .rem_euclid(3) as u8;
    check(w == 2, &format!("weight exponent {w}"))?;
    check(w == formula, &format!("weight {w} vs product formula {formula}"))?;
    let mut ours: Vec<(i8, [u32; 3])> = tp.iter().map(|t| (t.sign, t.colors)).collect();
    ours.sort();
    check(ours == displayed_triples(ca, cb, cc), "signed colour multiset differs from the displayed table")?;
    Ok(format!("20 R3 steps, W = t^{w}, triple points match the 5x4 table"))
}

fn c5() -> Result<String, String> {
    let mut slowest = Duration::ZERO;
    for n in 1..=5i64 {
        let start = Instant::now();
        let p = torus_covering_group(&sigma13(), &delta_power(2 * n), CommutationPolicy::Require)
            .and_then(|p| quotient_by_center(&p))
            .map_err(|e| e.to_string())?;
        let inv = abelianization(&p);
        let took = start.elapsed();
        slowest = slowest.max(took);
        check(inv == AbelianInvariants::new(1, &[2 * n]), &format!("n={n}: {inv}"))?;
        check(took < Duration::from_secs(10), &format!("n={n} took {took:?}"))?;
    }
    Ok(format!("Z + Z/2n for n=1..5, slowest {:.3}s", slowest.as_secs_f64()))
}

fn c6() -> Result<String, String> {
    for n in 1..=5i64 {
        let p = torus_covering_group(&sigma13(), &delta_power(2 * n + 1), CommutationPolicy::Require)
            .and_then(|p| quotient_by_center(&p))
            .map_err(|e| e.to_string())?;
        let inv = abelianization(&p);
        check(inv == AbelianInvariants::new(0, &[4 * (2 * n + 1)]), &format!("n={n}: {inv}"))?;
    }
    Ok("Z/4(2n+1) for n=1..5".into())
}

fn fw(text: &str) -> FreeWord {
    parse_free_word(text, 4).unwrap()
}

fn c7() -> Result<String, String> {
    let p = "x1 x2 x3 x4";
    for n in 1..=3usize {
        let pn = vec![p; n].join(" ");
        let pn_inv = vec!["x4^-1 x3^-1 x2^-1 x1^-1"; n].join(" ");
        let even = [
            format!("{pn} x1 {pn_inv}"),
            format!("{pn} x2 {pn_inv}"),
            format!("{pn} x3 {pn_inv}"),
            format!("{pn} x4 {pn_inv}"),
        ];
        let odd = [
            format!("{pn} x1 x2 x3 x4 x3^-1 x2^-1 x1^-1 {pn_inv}"),
            format!("{pn} x1 x2 x3 x2^-1 x1^-1 {pn_inv}"),
            format!("{pn} x1 x2 x1^-1 {pn_inv}"),
            format!("{pn} x1 {pn_inv}"),
        ];
        for (k, expected) in [(2 * n as i64, even), (2 * n as i64 + 1, odd)] {
            let beta = delta_power(k);
            for (j, e) in expected.iter().enumerate() {
                let x = FreeWord::generator(4, j + 1).unwrap();
                let got = artin_apply(&beta, &x).map_err(|e| e.to_string())?;
                // both sides freely reduced
                let want = fw(e);
                check(got.letters() == want.letters(), &format!("D^{k}, x{}: got {:?}", j + 1, got.letters()))?;
            }
        }
    }
    Ok("12 relations for D^2n and 12 for D^(2n+1), n=1..3, equal after free reduction".into())
}

fn c8() -> Result<String, String> {
    let a = sigma13();
    for n in 1..=3i64 {
        for k in [2 * n, 2 * n + 1] {
            let b = delta_power(k);
            let v = ribbon_verdict(&a, &b, 2, 2, None).map_err(|e| e.to_string())?;
            let RibbonVerdict::Ribbon(cert) = v else {
                return Err(format!("D^{k}: {v}"));
            };
            let back = CableDecomposition::from_text(&cert.to_text()).map_err(|e| e.to_string())?;
            check(back == cert, &format!("D^{k}: certificate does not round-trip"))?;
            check(verify_decomposition(&a, &b, &back).map_err(|e| e.to_string())?, &format!("D^{k}: reparsed certificate fails"))?;
            if k == 2 {
                let s = |t: &str, m| parse_braid(t, m).unwrap();
                check(cert.tubular == s("1 1", 2), "R(b) is not s1^2")?;
                check(cert.interior == vec![s("1 1", 2), s("1 1", 2)], "interior braids are not s1^2")?;
                check(cert.vertical == vec![s("1", 2), s("1", 2)], "vertical braids are not s1")?;
                let nrb = cable_lift(&cert.tubular, 2).map_err(|e| e.to_string())?;
                check(nrb == s("(2 1 3 2)^2", 4), &format!("NR(b) = {nrb}"))?;
                check(n_prime_sigma1(2).unwrap() == s("2 1 3 2", 4), "N'(s1) differs")?;
            }
        }
    }
    Ok("ribbon with re-verified certificates for D^k, k=2..7; NR(b) = (2 1 3 2)^2".into())
}

fn random_word(rng: &mut StdRng, degree: usize, len: usize) -> BraidWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..degree as i32);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect();
    BraidWord::from_signed(degree, &letters).unwrap()
}

/// A word equal to the identity in the braid group.
fn random_relation(rng: &mut StdRng, degree: usize) -> Vec<i32> {
    let i = rng.gen_range(1..degree as i32);
    match rng.gen_range(0..3) {
        0 => {
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            vec![s * i, -s * i]
        }
        1 if i + 1 < degree as i32 => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        _ => {
            let far: Vec<i32> = (1..degree as i32).filter(|j| (j - i).abs() >= 2).collect();
            if far.is_empty() {
                return vec![i, -i];
            }
            let j = far[rng.gen_range(0..far.len())];
            vec![i, j, -i, -j]
        }
    }
}

fn c9() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED);

    // Artin automorphisms: invertible, fixing x1 x2 ⋯ xm
    for case in 0..1000 {
        let m = rng.gen_range(2..=5);
        let beta = { let len = rng.gen_range(0..=12); random_word(&mut rng, m, len) };
        let boundary = FreeWord::identity(m);
        let boundary = (1..=m).fold(boundary, |acc, j| acc.product(&FreeWord::generator(m, j).unwrap()));
        let img = artin_apply(&beta, &boundary).map_err(|e| e.to_string())?;
        check(img == boundary, &format!("artin case {case}: boundary word moved by {beta}"))?;
        for j in 1..=m {
            let x = FreeWord::generator(m, j).unwrap();
            let y = artin_apply(&beta, &x).and_then(|y| artin_apply(&beta.inverse(), &y)).map_err(|e| e.to_string())?;
            check(y == x, &format!("artin case {case}: {beta} not inverted on x{j}"))?;
        }
    }

    for p in [3, 5, 7] {
        let q = Quandle::dihedral(p).map_err(|e| e.to_string())?;
        q.check_axioms().map_err(|e| format!("R_{p}: {e}"))?;
    }

    // normal forms ignore inserted relations
    for case in 0..1000 {
        let m = rng.gen_range(2..=5);
        let w = { let len = rng.gen_range(0..=10); random_word(&mut rng, m, len) };
        let mut letters = w.signed_letters();
        let at = rng.gen_range(0..=letters.len());
        let rel = random_relation(&mut rng, m);
        letters.splice(at..at, rel);
        let v = BraidWord::from_signed(m, &letters).unwrap();
        check(normal_form(&v) == normal_form(&w), &format!("normal form case {case}: {w} vs {v}"))?;
    }

    // Alexander polynomial under conjugation and stabilisation
    let mut done = 0;
    while done < 200 {
        let m = rng.gen_range(2..=4);
        let beta = { let len = rng.gen_range(1..=10); random_word(&mut rng, m, len) };
        if beta.permutation().cycle_count() != 1 {
            continue;
        }
        let base = alexander_polynomial(&beta).map_err(|e| e.to_string())?;
        let g = { let len = rng.gen_range(0..=5); random_word(&mut rng, m, len) };
        let conj = g.product(&beta).unwrap().product(&g.inverse()).unwrap();
        let s = if rng.gen_bool(0.5) { m as i32 } else { -(m as i32) };
        let mut stab = beta.signed_letters();
        stab.push(s);
        let stab = BraidWord::from_signed(m + 1, &stab).unwrap();
        for other in [conj, stab] {
            let p = alexander_polynomial(&other).map_err(|e| e.to_string())?;
            check(p == base, &format!("Alexander of {beta} is {base}, of {other} is {p}"))?;
        }
        done += 1;
    }

    // Φ is the same for the generated movie and the stored one
    let (a, b) = thm_pair();
    let stored = ChartMovie::from_text(include_str!("fixtures/twisted_chart.movie")).map_err(|e| e.to_string())?;
    let generated = slide_movie(&a, &b).map_err(|e| e.to_string())?;
    check(stored.steps != generated.steps, "stored movie coincides with the generated one")?;
    let x = cocycle_invariant(&a, &b, Some(&stored)).map_err(|e| e.to_string())?;
    let y = cocycle_invariant(&a, &b, Some(&generated)).map_err(|e| e.to_string())?;
    check(x == y, &format!("stored movie gives {x}, generated gives {y}"))?;

    Ok("artin 1000, quandle axioms p=3,5,7, normal forms 1000, Alexander 200, movie independence".into())
}

fn c10() -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tclink::cli::run(["tclink", "--help"], &mut out, &mut err);
    let help = String::from_utf8_lossy(&out);
    check(code == 0, "help exited nonzero")?;
    check(
        help.contains("does not decide whether two") && help.contains("equivalent or inequivalent"),
        "help text lacks the scope statement",
    )?;
    let readme = include_str!("../../../README.md");
    check(readme.contains("does not decide"), "README lacks the scope statement")?;
    Ok("equivalence questions are out of scope and documented as such".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("cocycle invariant 3 + 6t^2", c1),
        ("mirror invariant 3 + 6t", c2),
        ("colouring census", c3),
        ("triple points and Boltzmann weight", c4),
        ("abelianization of G_n/Z_n", c5),
        ("abelianization of G_n'", c6),
        ("Artin relation anchors", c7),
        ("ribbon certificates", c8),
        ("property suites", c9),
        ("scope boundary documented", c10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
