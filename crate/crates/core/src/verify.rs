//! Seeded verification suites over f64.
//!
//! Each suite draws reproducible samples, measures the worst deviation of
//! one algebraic property, and reports it against a fixed threshold. The
//! suites back both the acceptance tests and the command-line verifier.

use crate::error::Result;
use crate::herm::{det_invariant, form_tensor, HermBasis, HermVector};
use crate::lmap::{check_homomorphism, induced_map, kernel_elements, FinsLinearMap};
use crate::matrix::ComplexMatrix;
use crate::n2::{
    explicit_l_matrix, majorana_matrix, minkowski_metric, realify, symplectic_via_gamma, GammaSet,
    MajoranaSpinor,
};
use crate::n3::{
    compose_via_decomposition, cubic_form, cubic_via_gamma_split, decompose_sl3,
    embed_central_diagonal, embed_shear_lower, embed_shear_upper, embed_sl2, subgroup_51,
    subgroup_52, subgroup_53, subgroup_54, NineVector,
};
use crate::sample::{
    complex_normal, random_coords, random_sl_with, random_spinor, real_normal, rng_from_seed,
    SampleRng, GENERATOR_ID,
};
use crate::scalar::Tolerance;
use crate::spinor::{BasisChange, Spinor};
use crate::tensor::{SpinTensor, Valency};
use num_complex::Complex;
use rand::Rng;

/// Version tag stamped into verification reports.
pub const ARTIFACT_VERSION: &str = "1";

/// Configuration shared by every verification suite.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Spinor space dimension.
    pub n: usize,
    /// Base seed; each suite derives its own stream from it.
    pub seed: u64,
    /// Number of random draws per suite.
    pub trials: usize,
    /// Tolerance handed to constructors that validate their inputs.
    pub tol: Tolerance<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n: 2,
            seed: 0,
            trials: 100,
            tol: Tolerance::default(),
        }
    }
}

/// Outcome of one verified property.
#[derive(Debug, Clone)]
pub struct PropertyRecord {
    /// Stable snake_case property name.
    pub name: &'static str,
    /// Number of random draws that fed the measurement.
    pub trials: usize,
    /// Worst observed deviation, when the property measures one.
    pub max_deviation: Option<f64>,
    /// Threshold the deviation is compared against.
    pub threshold: f64,
    /// Whether the property held.
    pub pass: bool,
    /// True when the property does not apply to the configured dimension.
    pub skipped: bool,
}

impl PropertyRecord {
    fn within(name: &'static str, trials: usize, dev: f64, threshold: f64) -> Self {
        Self {
            name,
            trials,
            max_deviation: Some(dev),
            threshold,
            pass: dev.is_finite() && dev <= threshold,
            skipped: false,
        }
    }

    /// For separation-style properties: the measured value must exceed the
    /// threshold.
    fn exceeds(name: &'static str, trials: usize, value: f64, threshold: f64) -> Self {
        Self {
            name,
            trials,
            max_deviation: Some(value),
            threshold,
            pass: value > threshold,
            skipped: false,
        }
    }

    fn boolean(name: &'static str, ok: bool) -> Self {
        Self {
            name,
            trials: 1,
            max_deviation: None,
            threshold: 0.0,
            pass: ok,
            skipped: false,
        }
    }

    fn skip(name: &'static str) -> Self {
        Self {
            name,
            trials: 0,
            max_deviation: None,
            threshold: 0.0,
            pass: true,
            skipped: true,
        }
    }
}

/// Full report of one verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub artifact_version: &'static str,
    pub generator: &'static str,
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub properties: Vec<PropertyRecord>,
    pub pass: bool,
}

fn suite_rng(cfg: &VerifyConfig, tag: u64) -> SampleRng {
    rng_from_seed(cfg.seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

const HOMOMORPHISM_LIMIT: f64 = 1e-9;
const KERNEL_IDENTITY_LIMIT: f64 = 1e-12;
const KERNEL_SEPARATION_FLOOR: f64 = 1e-6;
const FORM_INVARIANCE_LIMIT: f64 = 1e-9;
const MINKOWSKI_LIMIT: f64 = 1e-12;
const LORENTZ_LIMIT: f64 = 1e-9;
const EXPLICIT_LIMIT: f64 = 1e-10;
const MAJORANA_LIMIT: f64 = 1e-12;
const SYMPLECTIC_LIMIT: f64 = 1e-12;
const CUBIC_LIMIT: f64 = 1e-10;
const GAMMA_SPLIT_LIMIT: f64 = 1e-10;
const DECOMPOSITION_LIMIT: f64 = 1e-10;
const PIPELINE_LIMIT: f64 = 1e-9;
const SUBGROUP_LIMIT: f64 = 1e-10;
const ADDITIVITY_LIMIT: f64 = 1e-12;
const FUNCTORIALITY_LIMIT: f64 = 1e-10;
const DUAL_PAIRING_LIMIT: f64 = 1e-10;
const SAMPLER_LIMIT: f64 = 1e-10;

/// Corner-pivot floor used when drawing matrices for the decomposition
/// suites.
const PIVOT_FLOOR: f64 = 0.1;

/// L(bc) equals L(b)L(c) over random unimodular pairs.
pub fn homomorphism(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let basis = HermBasis::standard(cfg.n)?;
    let mut rng = suite_rng(cfg, 1);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let b = random_sl_with::<f64, _>(cfg.n, &mut rng)?;
        let c = random_sl_with::<f64, _>(cfg.n, &mut rng)?;
        dev = dev.max(check_homomorphism(&b, &c, &basis, &cfg.tol)?);
    }
    Ok(PropertyRecord::within(
        "homomorphism_product_rule",
        cfg.trials,
        dev,
        HOMOMORPHISM_LIMIT,
    ))
}

/// Roots-of-unity scalar matrices induce the identity map.
pub fn kernel_identity(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let basis = HermBasis::standard(cfg.n)?;
    let id = FinsLinearMap::identity(cfg.n);
    let mut dev = 0.0f64;
    for k in kernel_elements::<f64>(cfg.n) {
        let l = induced_map(&k, &basis, &cfg.tol)?;
        dev = dev.max(l.max_diff(&id));
    }
    Ok(PropertyRecord::within(
        "kernel_maps_to_identity",
        cfg.n,
        dev,
        KERNEL_IDENTITY_LIMIT,
    ))
}

/// Random non-kernel matrices stay separated from the identity map.
pub fn kernel_separation(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let basis = HermBasis::standard(cfg.n)?;
    let id = FinsLinearMap::identity(cfg.n);
    let kernel = kernel_elements::<f64>(cfg.n);
    let mut rng = suite_rng(cfg, 2);
    let mut min_dist = f64::INFINITY;
    let mut used = 0usize;
    let mut attempts = 0usize;
    while used < cfg.trials && attempts < cfg.trials * 10 + 1000 {
        attempts += 1;
        let c = random_sl_with::<f64, _>(cfg.n, &mut rng)?;
        if kernel.iter().any(|k| c.max_diff(k) <= 1e-3) {
            continue;
        }
        let l = induced_map(&c, &basis, &cfg.tol)?;
        min_dist = min_dist.min(l.max_diff(&id));
        used += 1;
    }
    Ok(PropertyRecord::exceeds(
        "kernel_separation",
        used,
        min_dist,
        KERNEL_SEPARATION_FLOOR,
    ))
}

/// The degree-n form is invariant under every induced map, relatively to
/// the magnitude of the evaluated form.
pub fn form_invariance(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let basis = HermBasis::standard(cfg.n)?;
    let g = form_tensor(&basis)?;
    let mut rng = suite_rng(cfg, 3);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let c = random_sl_with::<f64, _>(cfg.n, &mut rng)?;
        let v = HermVector::new(cfg.n, random_coords(cfg.n * cfg.n, &mut rng))?;
        let l = induced_map(&c, &basis, &cfg.tol)?;
        let before = g.evaluate(v.coords())?;
        let after = g.evaluate(l.apply(&v)?.coords())?;
        dev = dev.max((after - before).abs() / before.abs().max(1.0));
    }
    Ok(PropertyRecord::within(
        "form_invariance",
        cfg.trials,
        dev,
        FORM_INVARIANCE_LIMIT,
    ))
}

/// The two-dimensional form coefficients are exactly the Minkowski metric.
pub fn minkowski_form(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 2 {
        return Ok(PropertyRecord::skip("minkowski_form_coefficients"));
    }
    let g = form_tensor(&HermBasis::<f64>::standard(2)?)?;
    let mut dev = (g.nonzeros() as f64 - 4.0).abs();
    let diag = [1.0, -1.0, -1.0, -1.0];
    for (a, want) in diag.iter().enumerate() {
        dev = dev.max((g.coefficient(&[a as u8, a as u8]) - want).abs());
    }
    for a in 0..4u8 {
        for b in (a + 1)..4u8 {
            dev = dev.max(g.coefficient(&[a, b]).abs());
        }
    }
    Ok(PropertyRecord::within(
        "minkowski_form_coefficients",
        1,
        dev,
        MINKOWSKI_LIMIT,
    ))
}

/// Induced maps at n = 2 are proper orthochronous Lorentz matrices.
pub fn lorentz_image(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 2 {
        return Ok(PropertyRecord::skip("lorentz_image_properties"));
    }
    let basis = HermBasis::<f64>::standard(2)?;
    let eta = minkowski_metric::<f64>();
    let mut rng = suite_rng(cfg, 4);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let c = random_sl_with::<f64, _>(2, &mut rng)?;
        let l = induced_map(&c, &basis, &cfg.tol)?;
        let m = l.matrix();
        let pulled = &(&m.transpose() * &eta) * m;
        dev = dev.max(pulled.max_diff(&eta));
        dev = dev.max((m.det()? - 1.0).abs());
        dev = dev.max((1.0 - m[(0, 0)]).max(0.0));
    }
    Ok(PropertyRecord::within(
        "lorentz_image_properties",
        cfg.trials,
        dev,
        LORENTZ_LIMIT,
    ))
}

/// The closed-form four-by-four map agrees with the trace-pairing route.
pub fn explicit_vs_trace(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 2 {
        return Ok(PropertyRecord::skip("explicit_map_matches_trace"));
    }
    let basis = HermBasis::<f64>::standard(2)?;
    let mut rng = suite_rng(cfg, 5);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let c = random_sl_with::<f64, _>(2, &mut rng)?;
        let explicit = explicit_l_matrix(&c)?;
        let traced = induced_map(&c, &basis, &cfg.tol)?;
        dev = dev.max(explicit.max_diff(traced.matrix()));
    }
    Ok(PropertyRecord::within(
        "explicit_map_matches_trace",
        cfg.trials,
        dev,
        EXPLICIT_LIMIT,
    ))
}

/// The real four-by-four action intertwines realification with the spinor
/// component transform, exercised through the spintensor transform path.
pub fn majorana_intertwining(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 2 {
        return Ok(PropertyRecord::skip("majorana_intertwining"));
    }
    let mut rng = suite_rng(cfg, 6);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let c = random_sl_with::<f64, _>(2, &mut rng)?;
        let s = random_spinor::<f64, _>(2, &mut rng)?;
        let change = BasisChange::from_component_matrix(c.clone(), &cfg.tol)?;
        let moved = SpinTensor::from_spinor(&s)?.transform(&change)?;
        let mapped = Spinor::new(vec![moved.get(&[0])?, moved.get(&[1])?])?;
        let lhs = realify(&mapped)?;
        let rv = majorana_matrix(&c)?.mul_vec(realify(&s)?.components());
        let rhs = MajoranaSpinor::new([rv[0], rv[1], rv[2], rv[3]])?;
        dev = dev.max(lhs.max_diff(&rhs));
    }
    Ok(PropertyRecord::within(
        "majorana_intertwining",
        cfg.trials,
        dev,
        MAJORANA_LIMIT,
    ))
}

/// The gamma matrices satisfy the Clifford relations exactly and the fifth
/// member is their ordered product.
pub fn clifford(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 2 {
        return Ok(PropertyRecord::skip("clifford_relations_exact"));
    }
    let g = GammaSet::new();
    Ok(PropertyRecord::boolean(
        "clifford_relations_exact",
        g.clifford_holds() && g.gamma5_is_product(),
    ))
}

/// The gamma rewrite of the antisymmetric product matches the component
/// formula.
pub fn symplectic(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 2 {
        return Ok(PropertyRecord::skip("symplectic_rewrite"));
    }
    let mut rng = suite_rng(cfg, 7);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let xi = random_spinor::<f64, _>(2, &mut rng)?;
        let eta = random_spinor::<f64, _>(2, &mut rng)?;
        let want = xi.component(0) * eta.component(1) - xi.component(1) * eta.component(0);
        let got = symplectic_via_gamma(&realify(&xi)?, &realify(&eta)?);
        dev = dev.max((want - got).norm());
    }
    Ok(PropertyRecord::within(
        "symplectic_rewrite",
        cfg.trials,
        dev,
        SYMPLECTIC_LIMIT,
    ))
}

/// The expanded cubic, the determinant, and the tensor evaluation agree.
pub fn cubic(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("cubic_matches_determinant"));
    }
    let basis = HermBasis::<f64>::standard(3)?;
    let g = form_tensor(&basis)?;
    let mut rng = suite_rng(cfg, 8);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let via_cubic = cubic_form(&v)?;
        let via_det = det_invariant(&v, &basis)?;
        let via_tensor = g.evaluate(v.coords())?;
        dev = dev.max((via_cubic - via_det).abs());
        dev = dev.max((via_tensor - via_cubic).abs());
        dev = dev.max((via_tensor - via_det).abs());
    }
    Ok(PropertyRecord::within(
        "cubic_matches_determinant",
        cfg.trials,
        dev,
        CUBIC_LIMIT,
    ))
}

/// The block-split rewrite of the cubic agrees with the expanded cubic.
pub fn gamma_split(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("gamma_split_matches_cubic"));
    }
    let mut rng = suite_rng(cfg, 9);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let v = NineVector::<f64>::new(3, random_coords(9, &mut rng))?;
        dev = dev.max((cubic_via_gamma_split(&v)? - cubic_form(&v)?).abs());
    }
    Ok(PropertyRecord::within(
        "gamma_split_matches_cubic",
        cfg.trials,
        dev,
        GAMMA_SPLIT_LIMIT,
    ))
}

fn random_sl3_with_pivot(rng: &mut SampleRng) -> Result<ComplexMatrix<f64>> {
    loop {
        let m = random_sl_with::<f64, _>(3, rng)?;
        if m[(2, 2)].norm() > PIVOT_FLOOR {
            return Ok(m);
        }
    }
}

/// Every usable SL(3, C) matrix reconstructs from its four-factor split.
pub fn decomposition(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("decomposition_residual"));
    }
    let mut rng = suite_rng(cfg, 10);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let m = random_sl3_with_pivot(&mut rng)?;
        let split = decompose_sl3(&m, &cfg.tol)?;
        dev = dev.max(split.residual);
    }
    Ok(PropertyRecord::within(
        "decomposition_residual",
        cfg.trials,
        dev,
        DECOMPOSITION_LIMIT,
    ))
}

/// Chaining the four closed-form subgroup actions reproduces the generic
/// induced map.
pub fn decomposition_pipeline(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("decomposition_pipeline"));
    }
    let basis = HermBasis::<f64>::standard(3)?;
    let mut rng = suite_rng(cfg, 11);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let m = random_sl3_with_pivot(&mut rng)?;
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let fast = compose_via_decomposition(&m, &v, &cfg.tol)?;
        let generic = induced_map(&m, &basis, &cfg.tol)?.apply(&v)?;
        dev = dev.max(fast.max_diff(&generic));
    }
    Ok(PropertyRecord::within(
        "decomposition_pipeline",
        cfg.trials,
        dev,
        PIPELINE_LIMIT,
    ))
}

fn four_normals(rng: &mut SampleRng) -> [f64; 4] {
    [
        real_normal(rng),
        real_normal(rng),
        real_normal(rng),
        real_normal(rng),
    ]
}

/// The embedded two-by-two block action matches the generic map.
pub fn subgroup_block(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("subgroup_block"));
    }
    let basis = HermBasis::<f64>::standard(3)?;
    let mut rng = suite_rng(cfg, 12);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let block = random_sl_with::<f64, _>(2, &mut rng)?;
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let fast = subgroup_51(&v, &block)?;
        let generic = induced_map(&embed_sl2(&block)?, &basis, &cfg.tol)?.apply(&v)?;
        dev = dev.max(fast.max_diff(&generic));
    }
    Ok(PropertyRecord::within(
        "subgroup_block",
        cfg.trials,
        dev,
        SUBGROUP_LIMIT,
    ))
}

/// The upper shear action matches the generic map.
pub fn subgroup_upper_shear(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("subgroup_upper_shear"));
    }
    let basis = HermBasis::<f64>::standard(3)?;
    let mut rng = suite_rng(cfg, 13);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let eps = four_normals(&mut rng);
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let fast = subgroup_52(&v, &eps)?;
        let generic = induced_map(&embed_shear_upper(&eps), &basis, &cfg.tol)?.apply(&v)?;
        dev = dev.max(fast.max_diff(&generic));
    }
    Ok(PropertyRecord::within(
        "subgroup_upper_shear",
        cfg.trials,
        dev,
        SUBGROUP_LIMIT,
    ))
}

/// The lower shear action matches the generic map.
pub fn subgroup_lower_shear(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("subgroup_lower_shear"));
    }
    let basis = HermBasis::<f64>::standard(3)?;
    let mut rng = suite_rng(cfg, 14);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let kappa = four_normals(&mut rng);
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let fast = subgroup_53(&v, &kappa)?;
        let generic = induced_map(&embed_shear_lower(&kappa), &basis, &cfg.tol)?.apply(&v)?;
        dev = dev.max(fast.max_diff(&generic));
    }
    Ok(PropertyRecord::within(
        "subgroup_lower_shear",
        cfg.trials,
        dev,
        SUBGROUP_LIMIT,
    ))
}

/// The unimodular diagonal action matches the generic map.
pub fn subgroup_diagonal(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("subgroup_diagonal"));
    }
    let basis = HermBasis::<f64>::standard(3)?;
    let mut rng = suite_rng(cfg, 15);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let mod_d = (real_normal::<f64, _>(&mut rng) * 0.5).exp();
        let phi = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let fast = subgroup_54(&v, mod_d, phi)?;
        let generic =
            induced_map(&embed_central_diagonal(mod_d, phi)?, &basis, &cfg.tol)?.apply(&v)?;
        dev = dev.max(fast.max_diff(&generic));
    }
    Ok(PropertyRecord::within(
        "subgroup_diagonal",
        cfg.trials,
        dev,
        SUBGROUP_LIMIT,
    ))
}

/// Both shear families compose additively in their parameters.
pub fn subgroup_additivity(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    if cfg.n != 3 {
        return Ok(PropertyRecord::skip("subgroup_shear_additivity"));
    }
    let mut rng = suite_rng(cfg, 16);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let v = NineVector::new(3, random_coords(9, &mut rng))?;
        let e1 = four_normals(&mut rng);
        let e2 = four_normals(&mut rng);
        let esum = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
        dev = dev.max(subgroup_52(&subgroup_52(&v, &e1)?, &e2)?.max_diff(&subgroup_52(&v, &esum)?));
        let k1 = four_normals(&mut rng);
        let k2 = four_normals(&mut rng);
        let ksum = [k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]];
        dev = dev.max(subgroup_53(&subgroup_53(&v, &k1)?, &k2)?.max_diff(&subgroup_53(&v, &ksum)?));
    }
    Ok(PropertyRecord::within(
        "subgroup_shear_additivity",
        cfg.trials,
        dev,
        ADDITIVITY_LIMIT,
    ))
}

/// Transforming along a composed basis change equals transforming twice.
pub fn functoriality(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let n = cfg.n;
    let mut rng = suite_rng(cfg, 17);
    let valency = Valency::new(1, 1, 1, 1);
    let len = n.pow(4);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let data = (0..len)
            .map(|_| complex_normal::<f64, _>(&mut rng))
            .collect();
        let t = SpinTensor::from_components(n, valency, data)?;
        let first =
            BasisChange::from_basis_matrix(random_sl_with::<f64, _>(n, &mut rng)?, &cfg.tol)?;
        let second =
            BasisChange::from_basis_matrix(random_sl_with::<f64, _>(n, &mut rng)?, &cfg.tol)?;
        let stepped = t.transform(&first)?.transform(&second)?;
        let joint = t.transform(&first.then(&second))?;
        let scale = stepped.max_norm().max(joint.max_norm()).max(1.0);
        dev = dev.max(stepped.max_diff(&joint) / scale);
    }
    Ok(PropertyRecord::within(
        "transform_functoriality",
        cfg.trials,
        dev,
        FUNCTORIALITY_LIMIT,
    ))
}

/// Full contraction of the dual pair of basis tensors gives the Kronecker
/// delta.
pub fn dual_pairing(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let basis = HermBasis::<f64>::standard(cfg.n)?;
    let d = basis.dim();
    let mut dev = 0.0f64;
    for a in 0..d {
        let upper_t = SpinTensor::from_matrix_lower(basis.upper_at(a))?;
        for b in 0..d {
            let lower_t = SpinTensor::from_matrix_upper(basis.lower_at(b))?;
            let joint = lower_t.tensor_product(&upper_t)?;
            let val = joint.contract(0, 2)?.contract(0, 1)?.as_scalar()?;
            let want = if a == b { 1.0 } else { 0.0 };
            dev = dev.max((val - Complex::new(want, 0.0)).norm());
        }
    }
    Ok(PropertyRecord::within(
        "dual_pairing",
        d * d,
        dev,
        DUAL_PAIRING_LIMIT,
    ))
}

/// Random unimodular draws really are unimodular.
pub fn unimodular_sampler(cfg: &VerifyConfig) -> Result<PropertyRecord> {
    let mut rng = suite_rng(cfg, 18);
    let mut dev = 0.0f64;
    for _ in 0..cfg.trials {
        let m = random_sl_with::<f64, _>(cfg.n, &mut rng)?;
        dev = dev.max((m.det()? - Complex::new(1.0, 0.0)).norm());
    }
    Ok(PropertyRecord::within(
        "unimodular_sampler",
        cfg.trials,
        dev,
        SAMPLER_LIMIT,
    ))
}

/// Runs every suite that applies to the configured dimension.
pub fn run_all(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let properties = vec![
        unimodular_sampler(cfg)?,
        homomorphism(cfg)?,
        kernel_identity(cfg)?,
        kernel_separation(cfg)?,
        form_invariance(cfg)?,
        functoriality(cfg)?,
        dual_pairing(cfg)?,
        minkowski_form(cfg)?,
        lorentz_image(cfg)?,
        explicit_vs_trace(cfg)?,
        majorana_intertwining(cfg)?,
        clifford(cfg)?,
        symplectic(cfg)?,
        cubic(cfg)?,
        gamma_split(cfg)?,
        decomposition(cfg)?,
        decomposition_pipeline(cfg)?,
        subgroup_block(cfg)?,
        subgroup_upper_shear(cfg)?,
        subgroup_lower_shear(cfg)?,
        subgroup_diagonal(cfg)?,
        subgroup_additivity(cfg)?,
    ];
    let pass = properties.iter().all(|p| p.pass);
    Ok(VerificationReport {
        suite: "all",
        artifact_version: ARTIFACT_VERSION,
        generator: GENERATOR_ID,
        n: cfg.n,
        seed: cfg.seed,
        trials: cfg.trials,
        tol_abs: cfg.tol.abs,
        tol_rel: cfg.tol.rel,
        properties,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_all_passes_for_small_dimensions() {
        for n in 2..=3 {
            let cfg = VerifyConfig {
                n,
                seed: 99,
                trials: 25,
                tol: Tolerance::default(),
            };
            let report = run_all(&cfg).unwrap();
            assert!(report.pass, "n={n}: {:#?}", report.properties);
            assert_eq!(report.generator, "chacha8");
        }
    }

    #[test]
    fn reports_are_reproducible_for_equal_seeds() {
        let cfg = VerifyConfig {
            n: 2,
            seed: 5,
            trials: 10,
            tol: Tolerance::default(),
        };
        let a = run_all(&cfg).unwrap();
        let b = run_all(&cfg).unwrap();
        for (x, y) in a.properties.iter().zip(&b.properties) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.max_deviation, y.max_deviation);
            assert_eq!(x.pass, y.pass);
        }
    }

    #[test]
    fn gated_suites_skip_on_other_dimensions() {
        let cfg = VerifyConfig {
            n: 4,
            seed: 1,
            trials: 5,
            tol: Tolerance::default(),
        };
        assert!(minkowski_form(&cfg).unwrap().skipped);
        assert!(cubic(&cfg).unwrap().skipped);
        let report = run_all(&cfg).unwrap();
        assert!(report.pass);
        assert!(report.properties.iter().any(|p| p.skipped));
        assert!(report
            .properties
            .iter()
            .filter(|p| !p.skipped)
            .all(|p| p.trials > 0));
    }
}
