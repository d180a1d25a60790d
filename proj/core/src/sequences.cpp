#include "qcontig/sequences.hpp"

namespace qcontig {

SequenceInput<Rational> random_sequence_input(std::uint64_t seed, long lo, long hi) {
    SplitMix64 rng(seed);
    auto draw = [&rng]() {
        long p = static_cast<long>(2 + rng.next() % 49);   // 2..50
        long q = static_cast<long>(51 + rng.next() % 50);  // 51..100
        return Rational(p) / Rational(q);
    };
    SequenceInput<Rational> in;
    in.lo = lo;
    for (long j = lo; j <= hi; ++j) {
        in.a_seq.push_back(draw());
        in.b_seq.push_back(draw());
    }
    in.alpha = draw();
    in.c = draw();
    in.d = draw();
    return in;
}

} // namespace qcontig
