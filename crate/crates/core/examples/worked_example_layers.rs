//! The four complexes of a small non-matroid closure operator and the three
//! layers of its augmented Bergman complex.

use augbergman::bergman::{
    augmented_bergman, bergman_complex, cone_bergman, independence_complex, layers, AugmentedFace,
};
use augbergman::instances;

fn main() -> augbergman::Result<()> {
    let f = instances::worked_example();
    for (name, complex) in [
        ("Bergman", bergman_complex(&f)),
        ("coned Bergman", cone_bergman(&f)?),
        ("independence", independence_complex(&f)?),
        ("augmented Bergman", augmented_bergman(&f)?),
    ] {
        let s = complex.stats()?;
        println!(
            "{name:>18}: {} facets, dim {}, pure {}, f={:?}, h={:?}",
            complex.facet_count(),
            s.dimension,
            s.pure,
            s.f_vector,
            s.h_vector
        );
    }

    let layers = layers(&f)?;
    for (name, facets) in [
        ("flag", &layers.flag),
        ("hybrid", &layers.hybrid),
        ("independent", &layers.independent),
    ] {
        println!("\n{name} layer, {} facets", facets.len());
        for facet in facets {
            println!("  {}", AugmentedFace::from_labels(&f, facet)?.display(&f));
        }
    }
    Ok(())
}
