//! Three routes to v_p(C(n, k)): borrows in n - k, carries in k + (n - k),
//! and Legendre's factorial formula.
//!
//!     cargo run --example valuations -- 1000 337 3

use lcm_binom::arith::binomial;
use lcm_binom::padic::{
    carries_when_adding, expand, vp_binomial_kummer, vp_binomial_legendre, vp_natural,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k, p) = match args[..] {
        [n, k, p] => (n, k, p),
        _ => (1000, 337, 3),
    };

    println!("n = {n}: digits base {p} (least significant first) {:?}", expand(n, p)?.digits());
    println!("k = {k}: digits base {p} (least significant first) {:?}", expand(k, p)?.digits());

    let borrows = vp_binomial_kummer(n, k, p)?;
    let carries = carries_when_adding(k, n - k, p)?;
    let legendre = vp_binomial_legendre(n, k, p)?;
    println!("borrows in n - k     : {borrows}");
    println!("carries in k + (n-k) : {carries}");
    println!("Legendre             : {legendre}");

    if n <= 5000 {
        let c = binomial(n, k)?;
        println!("direct on C(n,k)     : {} ({} digits)", vp_natural(&c, p)?, c.to_string().len());
    }
    Ok(())
}
