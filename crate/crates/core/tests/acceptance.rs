//! Acceptance suite: one PASS/FAIL line per criterion, with the individual
//! checks listed underneath.
//!
//! A few checks cannot pass because the published claim disagrees with the
//! exact computation. Those are registered as known gaps together with the
//! value the engine produces; the test fails if any other check fails or if
//! a known gap stops producing its recorded value.
//!
//! Run with `cargo test -p apolar-core --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, BTreeSet};

use apolar_core::apolar::{
    ann_dim, check_triangularity, dim_of_degree, hilbert_value, hilbert_sequence, minimal_generator_profile, minimal_monomial_generators,
    verify_generator_set, DetOrPerm, ProfileMethod,
};
use apolar_core::combinatorics::catalan;
use apolar_core::groebner::{is_groebner, leading_term, reduce, s_polynomial, MonomialOrder};
use apolar_core::invariants::{
    build_generator_set, det_poly, expected_size, immanant_poly, monomial_space, perm_poly, GeneratorKind, SpaceKind,
};
use apolar_core::pairing::{contract_apply, contraction_to_diff, diff_apply, divided_power_linear, to_divided, Pairing};
use apolar_core::parse::{format_letters, parse_letters, parse_poly};
use apolar_core::ranks::{
    det_hilbert_closed_form, det_length_closed_form, lt_bound_det, perm_hilbert_closed_form, perm_length_closed_form,
};
use apolar_core::ring::{int, monomials_of_degree, rat, Monomial, Polynomial, RingSpec};
use apolar_core::subspace::GradedSubspace;
use apolar_core::symgroup::{
    character_table, check_phi_equivariance, decompose, monomial_space_character, partitions, phi_kernel, phi_psi_maps,
    subspace_character, Partition,
};
use apolar_core::tables::{emit_table, Mismatch};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Check {
    label: String,
    passed: bool,
    detail: String,
    /// Recorded outcome of a check that is expected to fail.
    gap: Option<&'static str>,
}

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<Check>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion { id, title, checks: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, detail: detail.into(), gap: None });
    }

    fn known_gap(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>, recorded: &'static str) {
        self.checks.push(Check { label: label.into(), passed, detail: detail.into(), gap: Some(recorded) });
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn sym(n: usize) -> RingSpec {
    RingSpec::symmetric(n).unwrap()
}

fn letters(s: &str, n: usize) -> Polynomial {
    parse_letters(s, sym(n)).unwrap()
}

fn mismatch_text(m: &[Mismatch]) -> String {
    m.iter().map(|m| format!("{} {}: {} vs {}", m.row, m.column, m.actual, m.expected)).collect::<Vec<_>>().join("; ")
}

fn table_check(c: &mut Criterion, id: u32) {
    let t = emit_table(id, false).unwrap();
    let m = t.mismatches();
    c.check(format!("Table {} matches", id), m.is_empty(), mismatch_text(&m));
}

fn profile_counts(f: &Polynomial, pairing: Pairing) -> BTreeMap<u32, usize> {
    let d = f.homogeneous_degree().unwrap();
    minimal_generator_profile(f, pairing, d, ProfileMethod::Dual).unwrap().counts
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "Hilbert sequences of the symmetric determinant");
    table_check(&mut c, 1);
    for n in 2..=6 {
        let h = hilbert_sequence(&det_poly(&sym(n)).unwrap(), Pairing::Diff).unwrap().values;
        let closed: Vec<usize> = (0..=n as u64).map(|k| det_hilbert_closed_form(n as u64, k).try_into().unwrap()).collect();
        c.check(format!("n={} catalecticant ranks = minor counts", n), h == closed, format!("{:?}", h));
    }
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "Hilbert sequences of the symmetric permanent");
    table_check(&mut c, 2);
    for n in 2..=6 {
        let h = hilbert_sequence(&perm_poly(&sym(n)).unwrap(), Pairing::Diff).unwrap().values;
        let closed: Vec<usize> = (0..=n as u64).map(|k| perm_hilbert_closed_form(n as u64, k).try_into().unwrap()).collect();
        c.check(format!("n={} ranks = C(n,k)(C(n,k)+1)/2", n), h == closed, format!("{:?}", h));
    }
    let rows: Vec<String> = (7..=8u64)
        .map(|n| (0..=n).map(|k| perm_hilbert_closed_form(n, k).to_string()).collect::<Vec<_>>().join(","))
        .collect();
    let published = apolar_core::tables::TABLE2;
    let ok = (7..=8usize).all(|n| {
        published[n - 2].iter().enumerate().all(|(k, v)| perm_hilbert_closed_form(n as u64, k as u64) == BigInt::from(*v))
    });
    c.check("n=7,8 closed form = published rows", ok, rows.join(" / "));
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "Generators in degree two (det) and two and three (perm)");
    for n in 2..=5 {
        let ring = sym(n);
        let det = profile_counts(&det_poly(&ring).unwrap(), Pairing::Diff);
        let want = BTreeMap::from([(2, expected_size(GeneratorKind::V, n))]);
        c.check(format!("det n={} profile = {{2: dim V}}", n), det == want, format!("{:?}", det));
        let perm = profile_counts(&perm_poly(&ring).unwrap(), Pairing::Diff);
        let want = BTreeMap::from([(2, expected_size(GeneratorKind::W, n))]);
        c.check(format!("perm n={} profile = {{2: dim W}}", n), perm == want, format!("{:?}", perm));
    }
    let perm6 = profile_counts(&perm_poly(&sym(6)).unwrap(), Pairing::Diff);
    let want = BTreeMap::from([(2, expected_size(GeneratorKind::W, 6)), (3, 5)]);
    c.check("perm n=6 profile = {2: dim W, 3: 5}", perm6 == want, format!("{:?}", perm6));
    for n in 2..=6 {
        let ring = sym(n);
        let cap = if n == 6 { Some(3) } else { None };
        for (form, kind, f) in [
            ("det", GeneratorKind::V, det_poly(&ring).unwrap()),
            ("perm", GeneratorKind::WPlus, perm_poly(&ring).unwrap()),
        ] {
            let gens = build_generator_set(kind, n).unwrap();
            let rep = verify_generator_set(&f, &gens.members, Pairing::Diff, cap).unwrap();
            c.check(
                format!("verify {} n={} with {:?} (degrees {:?})", form, n, kind, rep.degrees_checked),
                rep.passed,
                format!("{:?}", rep.failures),
            );
        }
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "Length identities");
    for n in 2..=6u64 {
        let ring = sym(n as usize);
        let ld = hilbert_sequence(&det_poly(&ring).unwrap(), Pairing::Diff).unwrap().length;
        let lp = hilbert_sequence(&perm_poly(&ring).unwrap(), Pairing::Diff).unwrap().length;
        c.check(format!("n={} det length = C_(n+1)", n), BigInt::from(ld) == catalan(n + 1), ld.to_string());
        c.check(format!("n={} perm length = (C(2n,n)+2^n)/2", n), BigInt::from(lp) == perm_length_closed_form(n), lp.to_string());
    }
    for n in 2..=8u64 {
        let det_sum: BigInt = (0..=n).map(|k| det_hilbert_closed_form(n, k)).sum();
        let perm_sum: BigInt = (0..=n).map(|k| perm_hilbert_closed_form(n, k)).sum();
        c.check(
            format!("n={} closed-form sums", n),
            det_sum == det_length_closed_form(n) && perm_sum == perm_length_closed_form(n),
            format!("{} {}", det_sum, perm_sum),
        );
    }
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "Groebner basis check for V");
    for (n, recorded) in [(4, "125 of 595 S-pairs fail"), (5, "612 of 2415 S-pairs fail")] {
        let v = build_generator_set(GeneratorKind::V, n).unwrap().members;
        let lex = is_groebner(&v, MonomialOrder::ConcaLex, None).unwrap();
        let detail = format!("{} of {} S-pairs fail", lex.failures.len(), lex.pairs_checked);
        c.known_gap(format!("n={} Conca lex", n), lex.passed(), detail, recorded);
        let rev = is_groebner(&v, MonomialOrder::ReverseConcaLex, None).unwrap();
        c.check(
            format!("n={} reverse Conca order", n),
            rev.passed(),
            format!("{} of {} S-pairs fail", rev.failures.len(), rev.pairs_checked),
        );
    }
    let v5 = build_generator_set(GeneratorKind::V, 5).unwrap().members;
    let pairs = [
        ("AG + BC", "AN + DE", "BCN - DEG"),
        ("HL + IK + GN", "DG + CH + BK", "BKHL + BIK^2 - DG^2N - CGHN"),
        ("CH + DG + BK", "CI + EG + BL", "CHL + DGL - CIK - EGK"),
        ("2FJ + G^2", "CI + EG + BL", "BLG^2 - 2FJCI - 2FJEG"),
        ("BG + CF", "CI + EG + BL", "CFL - CIG - EG^2"),
    ];
    let mut lex_nonzero = Vec::new();
    for (f, g, expected) in pairs {
        let (f, g, e) = (letters(f, 5), letters(g, 5), letters(expected, 5));
        let s = s_polynomial(&f, &g, MonomialOrder::ConcaLex).unwrap();
        let (_, cs) = leading_term(&s, MonomialOrder::ConcaLex).unwrap();
        let (_, ce) = leading_term(&e, MonomialOrder::ConcaLex).unwrap();
        let same = s.scale(&(ce / cs)) == e;
        let zero = reduce(&e, &v5, MonomialOrder::ReverseConcaLex).unwrap().is_zero();
        c.check(format!("S-polynomial {} reproduces and lies in (V)", expected), same && zero, "");
        let nf = reduce(&e, &v5, MonomialOrder::ConcaLex).unwrap();
        if !nf.is_zero() {
            lex_nonzero.push(format!("{} -> {}", expected, format_letters(&nf).unwrap()));
        }
    }
    c.known_gap(
        "worked S-polynomials reduce to zero by Conca-lex division",
        lex_nonzero.is_empty(),
        lex_nonzero.join("; "),
        "BCN - DEG -> -CDI - CEH - DEG; CFL - CIG - EG^2 -> -2CGI - EG^2",
    );
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "Triangularity");
    for n in 3..=5 {
        for form in [DetOrPerm::Det, DetOrPerm::Perm] {
            for k in 3..=n as u32 {
                let r = check_triangularity(form, n, k).unwrap();
                c.check(
                    format!("{:?} n={} k={}", form, n, k),
                    r.passed,
                    format!("missing {:?} uncovered {:?}", r.unacceptable_missing, r.uncovered),
                );
            }
        }
    }
    let r = check_triangularity(DetOrPerm::Det, 3, 3).unwrap();
    let adf = letters("ADF", 3).format_with('y');
    c.check(
        "3x3 fixture: one initial monomial ADF, four non-initial",
        r.complement == vec![adf] && r.non_initial == 4 && r.initial == 1,
        format!("{:?}", r.complement),
    );
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "Rank tables");
    let t3 = emit_table(3, false).unwrap();
    let m3 = t3.mismatches();
    let rest: Vec<Mismatch> = m3.iter().filter(|m| !(m.row.starts_with("RS") && m.column == "n=6")).cloned().collect();
    c.check("Table 3 apart from RS n=6", rest.is_empty(), mismatch_text(&rest));
    let rs6 = t3.rows[0].cells[4].clone();
    c.known_gap("Table 3 RS n=6 = 209.5", rs6.matches(), format!("computed {}", rs6.actual), "computed 214.5");
    table_check(&mut c, 4);
    table_check(&mut c, 6);
    let lt4 = lt_bound_det(4, Some(2)).unwrap().value;
    c.check("LT bound at n=4 is 25", lt4 == 25, lt4.to_string());
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "Contraction");
    let r2 = sym(2);
    let f = parse_poly("x[1,1]^2 + 2*x[1,1]*x[2,2] + x[2,2]^2", r2).unwrap();
    let h = hilbert_sequence(&f, Pairing::Contract).unwrap().values;
    let gens = ["y[1,1]*y[2,2] - 2*y[2,2]^2", "y[1,1]^2 - y[2,2]^2"];
    let kill = gens.iter().all(|g| contract_apply(&parse_poly(g, r2).unwrap(), &f).unwrap().is_zero());
    c.check("square of a linear form: H = (1,2,1), generators annihilate", h == vec![1, 2, 1] && kill, format!("{:?}", h));

    let det2 = det_poly(&r2).unwrap();
    let perm_dual = letters("AC + B^2", 2);
    c.check("perm of the operators kills det by contraction", contract_apply(&perm_dual, &det2).unwrap().is_zero(), "");
    let h = hilbert_sequence(&det2, Pairing::Contract).unwrap().values;
    c.check("2x2 determinant: H = (1,3,1)", h == vec![1, 3, 1], format!("{:?}", h));
    let fd = to_divided(&contraction_to_diff(&det2)).unwrap();
    let half = rat(1, 2);
    let sq = |s: &str| divided_power_linear(&parse_poly(s, r2).unwrap(), 2).unwrap();
    let base = sq("x[1,1] + x[2,2]").scale(&half).checked_sub(&sq("x[1,1] - x[2,2]").scale(&half)).unwrap();
    let corrected = base.checked_sub(&sq("x[1,2]")).unwrap();
    c.check("xz - y^[2] = (x+z)^[2]/2 - (x-z)^[2]/2 - y^[2]", corrected == fd, "");
    let literal = base.checked_sub(&sq("x[1,2]").scale(&half)).unwrap();
    c.known_gap(
        "xz - y^[2] = (x+z)^[2]/2 - (x-z)^[2]/2 - y^[2]/2",
        literal == fd,
        format!("right side is {}", literal),
        "right side is X[1,1]*X[2,2] - 1/2*X[1,2]^2",
    );

    for n in 4..=5 {
        let ring = sym(n);
        let det = det_poly(&ring).unwrap();
        let perm = perm_poly(&ring).unwrap();
        let a = ann_dim(&det, 2, Pairing::Contract).unwrap();
        c.check(format!("n={} dim Ann_co(det)_2 = n^2 + C(n,2)", n), a == n * n + n * (n - 1) / 2, a.to_string());
        for (name, f) in [("det", &det), ("perm", &perm)] {
            let m2 = minimal_monomial_generators(f, Pairing::Contract, 2).unwrap();
            let m3 = minimal_monomial_generators(f, Pairing::Contract, 3).unwrap();
            let ok2 = m2.len() == n * n
                && m2.iter().all(|m| {
                    let vars: Vec<_> = m.variables().collect();
                    vars.iter().any(|v| v.is_diagonal() && vars.iter().all(|w| w.row == v.row || w.col == v.row))
                });
            let ok3 = m3.len() == n * (n - 1) * (n - 2) * (n - 3) / 6
                && m3.iter().all(|m| {
                    let vars: Vec<_> = m.variables().collect();
                    vars.len() == 3
                        && vars.iter().all(|v| !v.is_diagonal())
                        && (1..=n as u8).any(|i| vars.iter().all(|v| v.row == i || v.col == i))
                });
            c.check(
                format!("n={} {} monomial generators in degrees 2 and 3", n, name),
                ok2 && ok3,
                format!("{} and {}", m2.len(), m3.len()),
            );
        }
        let hd = hilbert_sequence(&det, Pairing::Contract).unwrap();
        let hp = hilbert_sequence(&perm, Pairing::Contract).unwrap();
        c.check(format!("n={} H_co(perm) = H_co(det)", n), hd == hp, format!("{:?}", hp.values));
    }
    table_check(&mut c, 5);
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "Representations of the symmetric group");
    for id in [7, 8, 9, 10] {
        table_check(&mut c, id);
    }
    for (n, want) in [(4, 2), (6, 3)] {
        let space = monomial_space(SpaceKind::MonHaf, &sym(n), n / 2).unwrap();
        let chi = monomial_space_character(&space).unwrap();
        let norm = chi.norm2();
        c.check(format!("<chi, chi> = {} for size {}", want, n), norm == int(want), norm.to_string());
    }
    for n in [4, 6, 8] {
        let space = monomial_space(SpaceKind::MonHaf, &sym(n), n / 2).unwrap();
        let chi = monomial_space_character(&space).unwrap();
        let got: BTreeSet<(Partition, u64)> = decompose(&chi).unwrap().into_iter().collect();
        let want: BTreeSet<(Partition, u64)> = partitions(n).into_iter().filter(|p| p.all_parts_even()).map(|p| (p, 1)).collect();
        c.check(format!("hafnian monomials of size {} = sum of even partitions", n), got == want, format!("{:?}", got));
    }
    let p = |v: &[u32]| Partition::new(v.to_vec());
    let kernel = subspace_character(&phi_kernel(6).unwrap()).unwrap();
    let total = monomial_space_character(&monomial_space(SpaceKind::MonHaf, &sym(6), 3).unwrap()).unwrap();
    let mut image = total.clone();
    for (a, b) in image.values.iter_mut().zip(&kernel.values) {
        *a -= b;
    }
    let kd = decompose(&kernel).unwrap();
    let id = decompose(&image).unwrap();
    c.check(
        "kernel = [2,2,2], image = [6] + [4,2]",
        kd == vec![(p(&[2, 2, 2]), 1)] && id.iter().cloned().collect::<BTreeSet<_>>() == BTreeSet::from([(p(&[6]), 1), (p(&[4, 2]), 1)]),
        format!("{:?} / {:?}", kd, id),
    );
    let m4 = phi_psi_maps(4).unwrap();
    c.check(
        "size 4: perm map rank 3 kernel 0, det map rank 2 kernel 1",
        (m4.phi.rank, m4.phi.kernel_dim, m4.psi.rank, m4.psi.kernel_dim) == (3, 0, 2, 1),
        "",
    );
    let m6 = phi_psi_maps(6).unwrap();
    c.check(
        "size 6: perm map rank 10 kernel 5, det map rank 5 kernel 10",
        (m6.phi.rank, m6.phi.kernel_dim, m6.psi.rank, m6.psi.kernel_dim) == (10, 5, 5, 10),
        "",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fails = check_phi_equivariance(6, 100, &mut rng).unwrap();
    c.check("equivariance on 100 random pairs", fails == 0, format!("{} failures", fails));
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "Immanants");
    let g3 = RingSpec::generic(3).unwrap();
    let std3 = Partition::new(vec![2, 1]);
    let imm = immanant_poly(&g3, &std3).unwrap();
    let want = parse_poly("2*x[1,1]*x[2,2]*x[3,3] - x[1,2]*x[2,3]*x[3,1] - x[2,1]*x[3,2]*x[1,3]", g3).unwrap();
    let h = hilbert_sequence(&imm, Pairing::Diff).unwrap().values;
    c.check("generic 3x3: polynomial and H = (1,9,9,1)", imm == want && h == vec![1, 9, 9, 1], format!("{:?}", h));
    let imm_s = immanant_poly(&sym(3), &std3).unwrap();
    let h = hilbert_sequence(&imm_s, Pairing::Diff).unwrap().values;
    c.check(
        "symmetric 3x3: polynomial and H = (1,6,6,1)",
        imm_s == letters("2adf - 2bce", 3) && h == vec![1, 6, 6, 1],
        format!("{:?}", h),
    );
    let r4 = sym(4);
    let mut imms = Vec::new();
    for (parts, want) in [(vec![3, 1], vec![1, 10, 39, 10, 1]), (vec![2, 2], vec![1, 10, 39, 10, 1]), (vec![2, 1, 1], vec![1, 10, 38, 10, 1])] {
        let f = immanant_poly(&r4, &Partition::new(parts.clone())).unwrap();
        let h = hilbert_sequence(&f, Pairing::Diff).unwrap().values;
        c.check(format!("symmetric 4x4 immanant {:?}: H = {:?}", parts, want), h == want, format!("{:?}", h));
        imms.push(f);
    }
    let plus = diff_apply(&letters("BI^2 + 2BHJ", 4), &imms[0]).unwrap().is_zero();
    let minus = diff_apply(&letters("BI^2 - 2BHJ", 4), &imms[2]).unwrap().is_zero();
    c.check("BI^2 + 2BHJ kills Imm_[3,1], BI^2 - 2BHJ kills Imm_[2,1,1]", plus && minus, "");
    c
}

fn random_poly(rng: &mut ChaCha8Rng, ring: RingSpec, terms: usize, max_exp: u32) -> Polynomial {
    let vars = ring.variables();
    let mut p = Polynomial::zero(ring);
    for _ in 0..rng.gen_range(0..=terms) {
        let m = Monomial::from_exponents(vars.iter().map(|&v| (v, rng.gen_range(0..=max_exp))));
        p.add_term(m, int(rng.gen_range(-6..=6)));
    }
    p
}

fn criterion_11() -> Criterion {
    let mut c = Criterion::new(11, "Property suites");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = 0;
    for _ in 0..500 {
        let ring = sym(rng.gen_range(1..=3));
        let f = random_poly(&mut rng, ring, 6, 4);
        let h = random_poly(&mut rng, ring, 4, 3);
        if to_divided(&diff_apply(&h, &f).unwrap()).unwrap() != contract_apply(&h, &to_divided(&f).unwrap()).unwrap() {
            bad += 1;
        }
    }
    c.check("divided powers intertwine the pairings (500 cases)", bad == 0, format!("{} failures", bad));

    let mut bad = Vec::new();
    for n in 2..=5 {
        let ring = sym(n);
        for (name, f) in [("det", det_poly(&ring).unwrap()), ("perm", perm_poly(&ring).unwrap())] {
            for p in [Pairing::Diff, Pairing::Contract] {
                for k in 0..=n as u32 + 1 {
                    if ann_dim(&f, k, p).unwrap() + hilbert_value(&f, k, p).unwrap() != dim_of_degree(&ring, k) {
                        bad.push(format!("{} n={} {} k={}", name, n, p, k));
                    }
                }
            }
        }
    }
    c.check("dim Ann_k + H_k = dim S_k", bad.is_empty(), bad.join(", "));

    let mut bad = Vec::new();
    for n in 1..=6 {
        let ring = sym(n);
        for (name, f) in [("det", det_poly(&ring).unwrap()), ("perm", perm_poly(&ring).unwrap())] {
            if !hilbert_sequence(&f, Pairing::Diff).unwrap().is_palindromic() {
                bad.push(format!("{} n={}", name, n));
            }
        }
    }
    c.check("Hilbert sequences of det and perm are palindromic", bad.is_empty(), bad.join(", "));

    let ring = sym(3);
    let v = build_generator_set(GeneratorKind::V, 3).unwrap().members;
    let mut bad = 0;
    for _ in 0..100 {
        let d = rng.gen_range(2..=4);
        let monos = monomials_of_degree(&ring, d);
        let p = Polynomial::from_terms(
            ring,
            (0..rng.gen_range(1..=6)).map(|_| (monos[rng.gen_range(0..monos.len())].clone(), int(rng.gen_range(-5..=5)))),
        );
        if p.is_zero() {
            continue;
        }
        for ord in [MonomialOrder::ConcaLex, MonomialOrder::ReverseConcaLex] {
            let r = reduce(&p, &v, ord).unwrap();
            let in_ideal = GradedSubspace::span(ring, d, ord, &v.iter().flat_map(|g| {
                monomials_of_degree(&ring, d - 2).into_iter().map(move |m| g.mul_monomial(&m))
            }).collect::<Vec<_>>()).unwrap().contains(&p.checked_sub(&r).unwrap());
            if reduce(&r, &v, ord).unwrap() != r || !in_ideal {
                bad += 1;
            }
        }
    }
    c.check("reduce is idempotent and p - reduce(p) lies in the ideal", bad == 0, format!("{} failures", bad));

    let mut bad = Vec::new();
    for n in 1..=8 {
        let t = character_table(n);
        for (i, a) in t.partitions.iter().enumerate() {
            for (j, b) in t.partitions.iter().enumerate() {
                let ip = t.character(a).unwrap().inner_product(&t.character(b).unwrap());
                let ok = if i == j { ip.is_one() } else { ip.is_zero() };
                if !ok {
                    bad.push(format!("n={} {} {}", n, a, b));
                }
            }
        }
    }
    c.check("irreducible characters are orthonormal for n <= 8", bad.is_empty(), bad.join(", "));
    c
}

#[test]
fn acceptance() {
    let criteria = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ];
    let mut unexpected = Vec::new();
    // the harness prefix leaves the cursor mid-line
    println!();
    for cr in &criteria {
        println!("{} {:>2} {}", if cr.passed() { "PASS" } else { "FAIL" }, cr.id, cr.title);
        for ch in &cr.checks {
            let mark = match (ch.passed, ch.gap) {
                (true, None) => "ok",
                (false, Some(_)) => "known gap",
                (true, Some(_)) => "gap closed",
                (false, None) => "FAILED",
            };
            if ch.detail.is_empty() {
                println!("       [{}] {}", mark, ch.label);
            } else {
                println!("       [{}] {}: {}", mark, ch.label, ch.detail);
            }
            match ch.gap {
                None if !ch.passed => unexpected.push(format!("{}: {}", cr.id, ch.label)),
                Some(rec) if ch.detail != rec || ch.passed => {
                    unexpected.push(format!("{}: {} (recorded '{}', got '{}')", cr.id, ch.label, rec, ch.detail))
                }
                _ => {}
            }
        }
    }
    let passed = criteria.iter().filter(|c| c.passed()).count();
    println!("{} of {} criteria pass", passed, criteria.len());
    assert!(unexpected.is_empty(), "unexpected results: {:#?}", unexpected);
}
