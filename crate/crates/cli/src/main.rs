fn main() {
    println!("randising scaffold");
}
