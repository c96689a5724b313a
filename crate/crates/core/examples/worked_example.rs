//! Lazy and full decomposition of a small parametric system.
//!
//! `cargo run --release -p realtri --example worked_example`

use realtri::{lazy_real_triangularize, real_triangularize, SemiAlgebraicSystem, VarOrder};

fn main() -> Result<(), realtri::Error> {
    let o = VarOrder::from_greatest_first(["y", "x", "b", "a"])?;
    let s = SemiAlgebraicSystem::new(
        o.clone(),
        vec![o.parse("x^3-3*x*y^2+a*x+b")?, o.parse("3*x^2-y^2+a")?],
        vec![],
        vec![o.parse("1-x*y")?],
        vec![o.parse("y")?],
    )?;
    println!("input {}", s.display());

    let lazy = lazy_real_triangularize(&s)?;
    println!("lazy:");
    for c in &lazy.components {
        println!("  {}", c.display(&o));
    }
    for d in &lazy.deferred {
        println!("  deferred {}", d.display());
    }

    println!("full:");
    for c in real_triangularize(&s)? {
        println!("  {}", c.display(&o));
    }
    Ok(())
}
