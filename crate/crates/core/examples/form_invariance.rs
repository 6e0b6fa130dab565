use finspinor::{form_tensor, induced_map, random_sl, HermBasis64, HermVector64, Tolerance64};

fn main() -> finspinor::Result<()> {
    let tol = Tolerance64::default();
    let basis = HermBasis64::standard(3)?;
    let g = form_tensor(&basis)?; // degree-3 sparse symmetric form

    let c = random_sl(3, 7)?; // seeded random 3x3 matrix with det 1
    let l = induced_map(&c, &basis, &tol)?; // 9x9 real matrix

    let v = HermVector64::new(3, (0..9).map(|k| 0.1 * k as f64).collect())?;
    let before = g.evaluate(v.coords())?;
    let after = g.evaluate(l.apply(&v)?.coords())?;
    assert!((before - after).abs() <= 1e-12 * before.abs().max(1.0));
    println!("invariant before {before:.12}, after {after:.12}");
    Ok(())
}
