#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathheaps/mpoly.hpp"

namespace pathheaps {

// A lattice path is a word over U (north step) and D (east step), read left
// to right, starting at the origin.
struct lattice_path {
  std::string word;

  int ups() const;    // number of U steps
  int downs() const;  // number of D steps

  friend auto operator<=>(const lattice_path&, const lattice_path&) = default;
};

// Parse a U/D word, case-insensitively.  Fails with bad_symbol otherwise.
lattice_path parse_path(const std::string& text);

// Reverse the word and swap U <-> D.  Maps (1,b)-paths to (b,1)-paths.
lattice_path dual_path(const lattice_path& mu);

// Height profile: h[i] = number of U steps before the (i+1)-th D step,
// i.e. the height at which the path crosses the column [i, i+1].
std::vector<int> height_profile(const lattice_path& mu);

// Peaks: lattice points at the top of a U step immediately followed by a D
// step, as (abscissa, ordinate) pairs in left-to-right order.
std::vector<std::pair<int, int>> peaks(const lattice_path& mu);

// True when mu has the same endpoint as ceiling and stays weakly below it.
bool is_below(const lattice_path& mu, const lattice_path& ceiling);

// Number of unit boxes between mu and the ceiling; fails with not_below if
// mu is not weakly below the ceiling.
long long area(const lattice_path& mu, const lattice_path& ceiling);

// Number of paths weakly below the ceiling with the same endpoint.
Int count_paths_below(const lattice_path& ceiling);

// Lazy enumeration of the paths weakly below a ceiling, in lexicographic
// order with D < U.  Construction fails with enumeration_too_large when the
// total count exceeds the cap.
class paths_below {
public:
  explicit paths_below(const lattice_path& ceiling,
                       std::int64_t cap = 10'000'000);

  // The next path, or nullopt when exhausted.
  std::optional<lattice_path> next();

  const Int& total() const { return total_; }

private:
  std::vector<int> heights_;
  int n_up_ = 0, n_down_ = 0;
  std::string current_;
  bool started_ = false, done_ = false;
  Int total_;

  bool complete_minimally(std::size_t from);
};

// All paths weakly below the ceiling, materialised.
std::vector<lattice_path> paths_below_all(const lattice_path& ceiling,
                                          std::int64_t cap = 10'000'000);

// Path families for which labelled heap models are defined.
struct path_family {
  enum class kind { one_b, a_one, general };
  kind k = kind::general;
  int param = 0;  // b for one_b, a for a_one
  int n = 0;      // size, for one_b / a_one
  lattice_path ceiling;

  static path_family one_b(int b, int n);
  static path_family a_one(int a, int n);
  static path_family general(lattice_path ceiling);
};

// Step sequence of a (1,k)-Dyck path of size n: m_i counts the unit boxes
// to the right of the i-th U step and left of the line x = kn, with a
// trailing m_{n+1} = 0.  Entries are weakly decreasing and m_i <= k(n+1-i).
struct step_sequence {
  std::vector<int> m;

  friend auto operator<=>(const step_sequence&, const step_sequence&) =
      default;
};

step_sequence path_to_steps(const lattice_path& mu, int k);
lattice_path path_from_steps(const step_sequence& s, int k);

// a-sequence of a ceiling mu0 = U^{b_r} D^{a_r} ... U^{b_1} D^{a_1}:
// a_i is the number of D steps at height N(U)+1-i, with a trailing 1.
std::vector<int> a_sequence(const lattice_path& mu0);

// b-sequence: b_i is the abscissa of the i-th U step.
std::vector<int> b_sequence(const lattice_path& mu);

}  // namespace pathheaps
