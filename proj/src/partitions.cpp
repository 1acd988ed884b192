#include "voabim/partitions.hpp"

#include <numeric>
#include <sstream>

namespace voabim {

int partition_weight(const Partition &p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

static void gen_rec(int n, int max_part, int min_part, Partition &cur,
                    std::vector<Partition> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= min_part; --part) {
    cur.push_back(part);
    gen_rec(n - part, part, min_part, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int min_part) {
  std::vector<Partition> out;
  if (n < 0)
    return out;
  Partition cur;
  gen_rec(n, n, min_part, cur, out);
  return out;
}

std::string partition_str(const Partition &p, const std::string &gen_name,
                          const std::string &tail) {
  std::ostringstream os;
  for (int part : p)
    os << gen_name << "(-" << part << ")";
  os << tail;
  return os.str();
}

} // namespace voabim
