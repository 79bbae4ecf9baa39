//! The independence complex of the worked example is not shellable, and the
//! augmented Bergman complex cannot be shelled with its bases first.

use augbergman::bergman::{augmented_bergman, independence_complex};
use augbergman::instances;
use augbergman::shelling::{
    find_shelling, verify_shelling, FacetClass, SearchConstraint, SearchOutcome,
    DEFAULT_SEARCH_BUDGET,
};

fn main() -> augbergman::Result<()> {
    let f = instances::worked_example();
    let indep = independence_complex(&f)?;

    // the two triangles meet in a single vertex
    let mut order = indep.facets();
    order.sort_by_key(|facet| std::cmp::Reverse(facet.len()));
    let verdict = verify_shelling(&indep, &augbergman::shelling::ShellingOrder::new(order))?;
    println!("triangles first: {verdict:?}");

    let outcome = find_shelling(&indep, &SearchConstraint::none(), DEFAULT_SEARCH_BUDGET)?;
    println!("independence complex: {outcome:?}");

    let delta = augmented_bergman(&f)?;
    let bases_first = SearchConstraint::class_first(FacetClass::Basis);
    let outcome = find_shelling(&delta, &bases_first, DEFAULT_SEARCH_BUDGET)?;
    println!("augmented complex, bases first: {outcome:?}");

    if let SearchOutcome::Found(order) =
        find_shelling(&delta, &SearchConstraint::none(), DEFAULT_SEARCH_BUDGET)?
    {
        println!(
            "augmented complex, unconstrained: {} facets, valid {}",
            order.len(),
            verify_shelling(&delta, &order)?.valid
        );
    }
    Ok(())
}
