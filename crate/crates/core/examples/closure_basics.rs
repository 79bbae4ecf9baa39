//! Build closure operators from flats, matroids and a seed, then enumerate
//! independent sets, bases and minors.

use augbergman::closure::{ClosureOperator, InstanceFile};
use augbergman::instances;

fn main() -> augbergman::Result<()> {
    let f = instances::worked_example();
    println!("{f}");

    let e = f.enumerate()?;
    let show = |sets: &[augbergman::closure::ElementSet]| {
        sets.iter()
            .map(|s| f.format_set(*s))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("independent sets: {}", show(&e.independent_sets));
    println!(
        "maximal independent sets: {}",
        show(&e.maximal_independent_sets)
    );
    println!("closure of {{1,4}}: {:?}", f.closure_of(&["1", "4"])?);
    println!("matroid check: {:?}", f.matroid_check()?.is_matroid());

    let line = f.set_of(&["3", "4"])?;
    println!("contraction by {{3,4}}: {}", f.contraction(line)?);
    println!("restriction to {{3,4}}: {}", f.restriction(line)?);

    let small = ClosureOperator::matroid_from_bases(
        &["a", "b", "c", "d"],
        &[
            vec!["a", "b"],
            vec!["a", "c"],
            vec!["b", "c"],
            vec!["a", "d"],
            vec!["b", "d"],
        ],
    )?;
    println!("from bases: {small} (matroid: {})", small.is_matroid()?);

    let random = instances::random(7, 4, 0.35)?;
    println!("random, seed 7: {random}");

    let file = InstanceFile::from_json(
        r#"{"ground_set":["1","2","3"],"matroid":{"type":"uniform","rank":2}}"#,
    )?;
    println!("from JSON: {}", file.to_operator()?);
    Ok(())
}
