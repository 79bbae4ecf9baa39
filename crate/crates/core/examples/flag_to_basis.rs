//! Build the flag-to-basis shelling of an augmented Bergman complex from
//! shellings of the contractions, and compare its restriction sets with the
//! predicted `I ⊔ R(F_• ∖ F_1)`.

use augbergman::bergman::{augmented_bergman, AugmentedFace};
use augbergman::instances;
use augbergman::shelling::{
    flag_to_basis_shelling, h_from_shelling, predicted_restriction_sets, FlatShellings,
    LinearExtension, DEFAULT_SEARCH_BUDGET,
};

fn main() -> augbergman::Result<()> {
    let f = instances::worked_example();
    let extension = LinearExtension::by_size_then_lex(&f)?;
    let flats = FlatShellings::search(&f, DEFAULT_SEARCH_BUDGET)?;
    let order = flag_to_basis_shelling(&f, &extension, &flats)?;
    let predicted = predicted_restriction_sets(&f, &flats, &order)?;
    let actual = order.restriction_sets.clone().unwrap_or_default();

    for (i, facet) in order.facets.iter().enumerate() {
        let face = AugmentedFace::from_labels(&f, facet)?;
        let r: Vec<String> = actual[i].iter().map(ToString::to_string).collect();
        let mark = if actual[i] == predicted[i] {
            ""
        } else {
            "  (differs from prediction)"
        };
        println!(
            "{:>3} {:<34} R={{{}}}{mark}",
            i + 1,
            face.display(&f),
            r.join(",")
        );
    }

    let histogram = h_from_shelling(&augmented_bergman(&f)?, &order)?;
    println!("restriction sizes: {:?}", histogram.counts);
    println!("h-vector:          {:?}", histogram.h_vector);
    if let Some(warning) = histogram.warning {
        println!("{warning}");
    }

    // a flat with a non-shellable contraction blocks the construction
    match FlatShellings::search(&instances::two_wedge(), DEFAULT_SEARCH_BUDGET) {
        Ok(_) => println!("two-wedge: unexpectedly shellable"),
        Err(e) => println!("two-wedge: {e}"),
    }
    Ok(())
}
