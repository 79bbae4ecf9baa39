//! Canonical JSON documents: complexes, shelling reports and the command
//! line front end writing into a buffer.

use augbergman::bergman::augmented_bergman;
use augbergman::complex::SimplicialComplex;
use augbergman::instances;
use augbergman::report::to_canonical_json;
use augbergman::shelling::{flag_to_basis_default, shelling_report, DEFAULT_SEARCH_BUDGET};

fn main() -> augbergman::Result<()> {
    let f = instances::uniform(2, 3)?;
    let delta = augmented_bergman(&f)?;
    let text = delta.to_json();
    println!("{text}");
    assert_eq!(SimplicialComplex::from_json(&text)?, delta);

    let order = flag_to_basis_default(&f, DEFAULT_SEARCH_BUDGET)?;
    println!("{}", to_canonical_json(&shelling_report(&delta, &order)?));

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = augbergman::cli::run_with(
        ["augbergman", "layers", "uniform:2,3", "--format=json"],
        &mut out,
        &mut err,
    );
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));
    Ok(())
}
