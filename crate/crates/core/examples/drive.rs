//! End-to-end drive of the public API: builds graphs three ways, runs every
//! distance variant and bound, and prints what a caller would see.
//!
//! Run with: cargo run --release -p graphdiff-core --example drive

use graphdiff_core::bounds::{product_special_case_bound, spectral_lower_bound};
use graphdiff_core::graph::{
    box_product, laplacian, lineage_member, parse_edge_list, random_bernoulli_graph,
    LineageFamily,
};
use graphdiff_core::spectra::decompose;
use graphdiff_core::{
    exp_distance, exp_fixed_alpha_distance, fixed_alpha_linear_distance, hammond_distance,
    linear_distance, tsgdd,
};

fn main() {
    // graphs from an edge list, a generator, and a product
    let tri = parse_edge_list("3\n0 1\n1 2\n0 2\n").expect("triangle parses");
    let pa4 = lineage_member(LineageFamily::Path, 4).expect("path exists");
    let grid = box_product(&pa4, &pa4);
    let rnd = random_bernoulli_graph(10, 0.5, 42);
    println!(
        "graphs: triangle n={} path n={} grid n={} random n={}",
        tri.n(),
        pa4.n(),
        grid.n(),
        rnd.n()
    );

    let d = linear_distance(&tri, &rnd);
    println!(
        "linear(tri, rnd):        value={:.6} alpha*={:.4} work={:.2e}",
        d.value,
        d.alpha_star.unwrap(),
        d.work
    );
    let d = fixed_alpha_linear_distance(&tri, &rnd, 1.0);
    println!("linear(tri, rnd | a=1):  value={:.6}", d.value);
    let slb = spectral_lower_bound(
        &decompose(&laplacian(&tri)).spectrum,
        &decompose(&laplacian(&rnd)).spectrum,
        1.0,
    );
    println!(
        "spectral lower bound:    {:.6} (must be <= {:.6})",
        slb,
        d.value * d.value
    );
    let d = tsgdd(&tri, &rnd, 0.5);
    println!("tsgdd(tri, rnd, r=0.5):  value={:.6}", d.value);

    let d = exp_distance(&pa4, &grid);
    println!(
        "exp(pa4, grid):          value={:.6} t*={:.4} alpha*={:.4}",
        d.value,
        d.t_star.unwrap(),
        d.alpha_star.unwrap()
    );
    let d = exp_fixed_alpha_distance(&pa4, &grid, 1.0);
    println!(
        "exp(pa4, grid | a=1):    value={:.6} t*={:.4}",
        d.value,
        d.t_star.unwrap()
    );

    let sq3 = lineage_member(LineageFamily::SquareGrid, 3).expect("grid exists");
    let cy9 = lineage_member(LineageFamily::Cycle, 9).expect("cycle exists");
    let d = hammond_distance(&sq3, &cy9).expect("equal sizes");
    println!(
        "hammond(sq3, cy9):       value={:.6} t*={:.4}",
        d.value,
        d.t_star.unwrap()
    );
    match hammond_distance(&tri, &pa4) {
        Err(e) => println!("hammond(tri, pa4):       rejected as expected: {e}"),
        Ok(_) => println!("hammond(tri, pa4):       UNEXPECTEDLY ACCEPTED"),
    }

    let pa5 = lineage_member(LineageFamily::Path, 5).expect("path exists");
    let d45 = exp_distance(&pa4, &pa5);
    let b = product_special_case_bound(&pa4, &pa5, d45.t_star.unwrap(), d45.alpha_star.unwrap());
    println!(
        "product special case:    {:.6} from factor pair at (t*={:.4}, a*={:.4})",
        b,
        d45.t_star.unwrap(),
        d45.alpha_star.unwrap()
    );
}
