//! Acceptance gate: one seeded, full-size check per shipped guarantee.
//!
//! Each test prints a single `[PASS]`/`[FAIL]` line (visible with
//! `--nocapture`) and then asserts, so the suite doubles as a readable
//! checklist of what the library promises.

use finspinor::verify::{self, PropertyRecord, VerifyConfig};
use finspinor::Tolerance64;
use std::time::Instant;

const SEED: u64 = 0xF1A5;

fn cfg(n: usize, trials: usize) -> VerifyConfig {
    VerifyConfig {
        n,
        seed: SEED,
        trials,
        tol: Tolerance64::default(),
    }
}

fn finish(label: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[{status}] {label}: {detail}");
    assert!(pass, "{label}: {detail}");
}

fn dev(rec: &PropertyRecord) -> f64 {
    rec.max_deviation.expect("suite reports a deviation")
}

#[test]
fn acceptance_01_induced_map_is_multiplicative() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut pass = true;
    for n in 2..=5 {
        let rec = verify::homomorphism(&cfg(n, 500)).unwrap();
        worst = worst.max(dev(&rec));
        pass &= rec.pass;
    }
    let elapsed = start.elapsed().as_secs_f64();
    pass &= elapsed < 10.0;
    finish(
        "01 induced map is multiplicative",
        pass,
        &format!(
            "max deviation {worst:.3e} (limit 1e-9) over 500 pairs per n in 2..=5, {elapsed:.2}s"
        ),
    );
}

#[test]
fn acceptance_02_kernel_is_exactly_the_roots_of_unity() {
    let mut ident = 0.0f64;
    let mut sep = f64::INFINITY;
    let mut pass = true;
    for n in 2..=6 {
        let ki = verify::kernel_identity(&cfg(n, 500)).unwrap();
        let ks = verify::kernel_separation(&cfg(n, 500)).unwrap();
        ident = ident.max(dev(&ki));
        sep = sep.min(dev(&ks));
        pass &= ki.pass && ks.pass;
    }
    finish(
        "02 kernel is exactly the roots of unity",
        pass,
        &format!(
            "kernel-to-identity deviation {ident:.3e} (limit 1e-12), \
             non-kernel separation {sep:.3e} (floor 1e-6), n in 2..=6"
        ),
    );
}

#[test]
fn acceptance_03_degree_n_form_is_invariant() {
    let mut worst = 0.0f64;
    let mut pass = true;
    for n in 2..=5 {
        let rec = verify::form_invariance(&cfg(n, 1000)).unwrap();
        worst = worst.max(dev(&rec));
        pass &= rec.pass;
    }
    finish(
        "03 degree-n form is invariant",
        pass,
        &format!("max relative deviation {worst:.3e} (limit 1e-9) over 1000 pairs per n in 2..=5"),
    );
}

#[test]
fn acceptance_04_two_dimensional_case_recovers_minkowski_space() {
    let form = verify::minkowski_form(&cfg(2, 1)).unwrap();
    let lorentz = verify::lorentz_image(&cfg(2, 1000)).unwrap();
    finish(
        "04 two-dimensional case recovers Minkowski space",
        form.pass && lorentz.pass,
        &format!(
            "form coefficient deviation {:.3e} (limit 1e-12), \
             Lorentz-property deviation {:.3e} (limit 1e-9) over 1000 samples",
            dev(&form),
            dev(&lorentz)
        ),
    );
}

#[test]
fn acceptance_05_closed_form_four_map_matches_trace_route() {
    let rec = verify::explicit_vs_trace(&cfg(2, 1000)).unwrap();
    finish(
        "05 closed-form 4x4 map matches the trace route",
        rec.pass,
        &format!(
            "max deviation {:.3e} (limit 1e-10) over 1000 samples",
            dev(&rec)
        ),
    );
}

#[test]
fn acceptance_06_majorana_layer_is_consistent() {
    let inter = verify::majorana_intertwining(&cfg(2, 1000)).unwrap();
    let cliff = verify::clifford(&cfg(2, 1)).unwrap();
    let sympl = verify::symplectic(&cfg(2, 1000)).unwrap();
    finish(
        "06 Majorana layer is consistent",
        inter.pass && cliff.pass && sympl.pass,
        &format!(
            "intertwining deviation {:.3e} (limit 1e-12), Clifford relations exact: {}, \
             symplectic rewrite deviation {:.3e} (limit 1e-12), 1000 samples each",
            dev(&inter),
            cliff.pass,
            dev(&sympl)
        ),
    );
}

#[test]
fn acceptance_07_cubic_form_matches_determinant_and_tensor() {
    let rec = verify::cubic(&cfg(3, 1000)).unwrap();
    finish(
        "07 cubic form matches determinant and tensor evaluation",
        rec.pass,
        &format!(
            "max deviation {:.3e} (limit 1e-10) over 1000 vectors",
            dev(&rec)
        ),
    );
}

#[test]
fn acceptance_08_four_factor_decomposition_reconstructs_and_composes() {
    let split = verify::decomposition(&cfg(3, 1000)).unwrap();
    let pipe = verify::decomposition_pipeline(&cfg(3, 1000)).unwrap();
    finish(
        "08 four-factor decomposition reconstructs and composes",
        split.pass && pipe.pass,
        &format!(
            "reconstruction residual {:.3e} (limit 1e-10), \
             pipeline-vs-generic deviation {:.3e} (limit 1e-9), 1000 draws each",
            dev(&split),
            dev(&pipe)
        ),
    );
}

#[test]
fn acceptance_09_subgroup_actions_match_generic_map() {
    let recs = [
        verify::subgroup_block(&cfg(3, 300)).unwrap(),
        verify::subgroup_upper_shear(&cfg(3, 300)).unwrap(),
        verify::subgroup_lower_shear(&cfg(3, 300)).unwrap(),
        verify::subgroup_diagonal(&cfg(3, 300)).unwrap(),
    ];
    let family = recs.iter().map(dev).fold(0.0f64, f64::max);
    let additive = verify::subgroup_additivity(&cfg(3, 300)).unwrap();
    let closing = verify::gamma_split(&cfg(3, 1000)).unwrap();
    let pass = recs.iter().all(|r| r.pass) && additive.pass && closing.pass;
    finish(
        "09 subgroup actions match the generic map",
        pass,
        &format!(
            "family deviation {family:.3e} (limit 1e-10, 300 draws each), \
             shear additivity {:.3e} (limit 1e-12), \
             cubic rewrite {:.3e} (limit 1e-10)",
            dev(&additive),
            dev(&closing)
        ),
    );
}

#[test]
fn acceptance_10_spintensor_layer_is_functorial() {
    let mut functor = 0.0f64;
    let mut pairing = 0.0f64;
    let mut pass = true;
    for n in 2..=5 {
        let f = verify::functoriality(&cfg(n, 200)).unwrap();
        let p = verify::dual_pairing(&cfg(n, 1)).unwrap();
        functor = functor.max(dev(&f));
        pairing = pairing.max(dev(&p));
        pass &= f.pass && p.pass;
    }
    finish(
        "10 spintensor layer is functorial",
        pass,
        &format!(
            "transform functoriality {functor:.3e} (limit 1e-10, 200 draws per n in 2..=5), \
             dual-pair contraction vs delta {pairing:.3e} (limit 1e-10)"
        ),
    );
}
