#include "unref/sample.hpp"

#include "unref/residue_table.hpp"

namespace unref {

StarSequence sample_unrefinable(std::int64_t length, std::int64_t mu, std::mt19937_64& rng,
                                double part_bias) {
  if (mu < 1 || mu > length) throw ContractViolation("sample_unrefinable needs 1 <= mu <= length");
  std::bernoulli_distribution take_part(part_bias);
  StarSequence seq = StarSequence::branch_root(mu);
  ResidueTable table(mu);
  for (std::int64_t r = mu + 1; r <= length; ++r) {
    if (table.admits(r) && take_part(rng)) {
      seq.push_part();
    } else {
      seq.push_star();
      table.apply(r);
    }
  }
  return seq;
}

StarSequence sample_uniform(std::int64_t length, std::mt19937_64& rng) {
  std::vector<Slot> slots(static_cast<std::size_t>(length));
  for (auto& s : slots) s = (rng() & 1) ? Slot::Part : Slot::Missing;
  return StarSequence(std::move(slots));
}

}  // namespace unref
