//! The h-polynomial of the augmented Bergman complex against the sum of
//! `t^|I| h(B(f/f(I)), t)` over independent sets.

use augbergman::instances;
use augbergman::shelling::augmented_h_formula;

fn main() -> augbergman::Result<()> {
    let cases = [
        ("U(2,3)", instances::uniform(2, 3)?),
        ("U(2,4)", instances::uniform(2, 4)?),
        ("U(3,4)", instances::uniform(3, 4)?),
        ("worked example", instances::worked_example()),
    ];
    for (name, f) in cases {
        let r = augmented_h_formula(&f)?;
        println!(
            "{name:>15}: sum {:?}  h {:?}  agree {}  (augmented pure {}, contractions pure {})",
            r.formula, r.actual, r.agree, r.augmented_pure, r.contractions_pure
        );
    }
    Ok(())
}
