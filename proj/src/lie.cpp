#include "schubert_ed/lie.hpp"

#include <cctype>
#include <stdexcept>

namespace schubert_ed {

std::string family_name(LieFamily f) { return std::string(1, static_cast<char>(f)); }

bool parse_family(const std::string& text, LieFamily& f, int* rank_out) {
  if (text.empty()) return false;
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') return false;
  f = static_cast<LieFamily>(c);
  if (text.size() > 1) {
    try {
      size_t pos = 0;
      int r = std::stoi(text.substr(1), &pos);
      if (pos != text.size() - 1) return false;
      if (rank_out) *rank_out = r;
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

bool valid_rank(LieFamily f, int rank) {
  switch (f) {
    case LieFamily::A: return rank >= 1;
    case LieFamily::B: return rank >= 2;
    case LieFamily::C: return rank >= 2;
    case LieFamily::D: return rank >= 4;
    case LieFamily::E: return rank == 6 || rank == 7 || rank == 8;
    case LieFamily::F: return rank == 4;
    case LieFamily::G: return rank == 2;
  }
  return false;
}

std::string rank_range_text(LieFamily f) {
  switch (f) {
    case LieFamily::A: return "n >= 1";
    case LieFamily::B: return "n >= 2";
    case LieFamily::C: return "n >= 2";
    case LieFamily::D: return "n >= 4";
    case LieFamily::E: return "n in {6,7,8}";
    case LieFamily::F: return "n = 4";
    case LieFamily::G: return "n = 2";
  }
  return "";
}

static uint64_t factorial(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
  return r;
}

uint64_t weyl_group_order(LieFamily f, int rank) {
  switch (f) {
    case LieFamily::A: return factorial(rank + 1);
    case LieFamily::B:
    case LieFamily::C: return factorial(rank) << rank;
    case LieFamily::D: return factorial(rank) << (rank - 1);
    case LieFamily::E:
      if (rank == 6) return 51840ull;
      if (rank == 7) return 2903040ull;
      return 696729600ull;
    case LieFamily::F: return 1152ull;
    case LieFamily::G: return 12ull;
  }
  return 0;
}

int positive_root_count(LieFamily f, int rank) {
  switch (f) {
    case LieFamily::A: return rank * (rank + 1) / 2;
    case LieFamily::B:
    case LieFamily::C: return rank * rank;
    case LieFamily::D: return rank * (rank - 1);
    case LieFamily::E:
      if (rank == 6) return 36;
      if (rank == 7) return 63;
      return 120;
    case LieFamily::F: return 24;
    case LieFamily::G: return 6;
  }
  return 0;
}

int coxeter_number_of(LieFamily f, int rank) {
  switch (f) {
    case LieFamily::A: return rank + 1;
    case LieFamily::B:
    case LieFamily::C: return 2 * rank;
    case LieFamily::D: return 2 * (rank - 1);
    case LieFamily::E:
      if (rank == 6) return 12;
      if (rank == 7) return 18;
      return 30;
    case LieFamily::F: return 12;
    case LieFamily::G: return 6;
  }
  return 0;
}

ParabolicSubset ParabolicSubset::from_excluded(int rank, const std::vector<int>& nodes) {
  ParabolicSubset p;
  p.rank = rank;
  for (int n : nodes) {
    if (n < 1 || n > rank) throw std::invalid_argument("excluded node out of range: " + std::to_string(n));
    p.excluded_mask |= 1u << n;
  }
  return p;
}

ParabolicSubset ParabolicSubset::full_exclusion(int rank) {
  ParabolicSubset p;
  p.rank = rank;
  for (int n = 1; n <= rank; ++n) p.excluded_mask |= 1u << n;
  return p;
}

std::vector<int> ParabolicSubset::excluded_nodes() const {
  std::vector<int> out;
  for (int n = 1; n <= rank; ++n)
    if (is_excluded(n)) out.push_back(n);
  return out;
}

std::vector<int> ParabolicSubset::retained_nodes() const {
  std::vector<int> out;
  for (int n = 1; n <= rank; ++n)
    if (!is_excluded(n)) out.push_back(n);
  return out;
}

int ParabolicSubset::excluded_count() const {
  return static_cast<int>(excluded_nodes().size());
}

}  // namespace schubert_ed
