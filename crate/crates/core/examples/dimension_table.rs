//! dim H̄^p = Σ_α n_α² ∏_k n_k! r_k^{n_k} = n! rⁿ, tabulated.

use cyclo_schur::modified_ak::dimension_table;

fn main() {
    let (rows, check) = dimension_table(4, 3, 3);
    println!("{:>2} {:<10} {:>8} {:>8} {:>8}", "n", "p", "Σ_α", "n!rⁿ", "Σ f²");
    for r in &rows {
        println!("{:>2} {:<10} {:>8} {:>8} {:>8}", r.n, format!("{:?}", r.p), r.block_sum, r.expected, r.hook_sum);
    }
    println!("{}: {}", check.name, check.passed);
}
