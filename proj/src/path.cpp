#include "pathheaps/path.hpp"

#include <algorithm>

namespace pathheaps {

int lattice_path::ups() const {
  return static_cast<int>(std::count(word.begin(), word.end(), 'U'));
}

int lattice_path::downs() const {
  return static_cast<int>(std::count(word.begin(), word.end(), 'D'));
}

lattice_path parse_path(const std::string& text) {
  lattice_path p;
  p.word.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u')
      p.word.push_back('U');
    else if (c == 'D' || c == 'd')
      p.word.push_back('D');
    else
      fail(errc::bad_symbol, std::string("parse_path: bad symbol '") + c + "'");
  }
  return p;
}

lattice_path dual_path(const lattice_path& mu) {
  lattice_path r;
  r.word.reserve(mu.word.size());
  for (auto it = mu.word.rbegin(); it != mu.word.rend(); ++it)
    r.word.push_back(*it == 'U' ? 'D' : 'U');
  return r;
}

std::vector<int> height_profile(const lattice_path& mu) {
  std::vector<int> h;
  int u = 0;
  for (char c : mu.word) {
    if (c == 'U')
      ++u;
    else
      h.push_back(u);
  }
  return h;
}

std::vector<std::pair<int, int>> peaks(const lattice_path& mu) {
  std::vector<std::pair<int, int>> r;
  int x = 0, y = 0;
  for (std::size_t i = 0; i < mu.word.size(); ++i) {
    if (mu.word[i] == 'U') {
      ++y;
      if (i + 1 < mu.word.size() && mu.word[i + 1] == 'D') r.emplace_back(x, y);
    } else {
      ++x;
    }
  }
  return r;
}

bool is_below(const lattice_path& mu, const lattice_path& ceiling) {
  if (mu.ups() != ceiling.ups() || mu.downs() != ceiling.downs()) return false;
  auto hm = height_profile(mu);
  auto hc = height_profile(ceiling);
  for (std::size_t i = 0; i < hm.size(); ++i)
    if (hm[i] > hc[i]) return false;
  return true;
}

long long area(const lattice_path& mu, const lattice_path& ceiling) {
  if (!is_below(mu, ceiling))
    fail(errc::not_below, "area: path is not weakly below the ceiling");
  auto hm = height_profile(mu);
  auto hc = height_profile(ceiling);
  long long a = 0;
  for (std::size_t i = 0; i < hm.size(); ++i) a += hc[i] - hm[i];
  return a;
}

Int count_paths_below(const lattice_path& ceiling) {
  auto h = height_profile(ceiling);
  const int X = static_cast<int>(h.size());
  const int Y = ceiling.ups();
  // ways[y] = number of admissible prefixes ending at (x, y).
  std::vector<Int> ways(static_cast<std::size_t>(Y) + 1, 0);
  ways[0] = 1;
  // Column x = 0: climb freely up to the ceiling of the first column.
  // Then alternate east moves with climbs, capping heights per column.
  int cap0 = X > 0 ? h[0] : Y;
  for (int y = 1; y <= cap0; ++y) ways[y] = ways[y - 1];
  for (int x = 0; x < X; ++x) {
    int cap = x + 1 < X ? h[x + 1] : Y;
    // East step from column x keeps y <= h[x]; then climb up to cap.
    for (int y = h[x] + 1; y <= Y; ++y) ways[y] = 0;
    for (int y = 1; y <= cap; ++y) ways[y] += ways[y - 1];
  }
  return ways[Y];
}

paths_below::paths_below(const lattice_path& ceiling, std::int64_t cap)
    : heights_(height_profile(ceiling)),
      n_up_(ceiling.ups()),
      n_down_(ceiling.downs()),
      total_(count_paths_below(ceiling)) {
  if (!ceiling.word.empty() &&
      (ceiling.word.front() != 'U' || ceiling.word.back() != 'D'))
    fail(errc::bad_ceiling, "paths_below: ceiling must start U and end D");
  if (total_ > cap)
    fail(errc::enumeration_too_large,
         "paths_below: " + total_.str() + " paths exceeds cap " +
             std::to_string(cap));
}

// Fill positions [from, end) with the lexicographically smallest valid
// completion (D < U).  Returns false when no completion exists.
bool paths_below::complete_minimally(std::size_t from) {
  int u = 0, d = 0;
  for (std::size_t i = 0; i < from; ++i)
    (current_[i] == 'U' ? u : d)++;
  int u_rem = n_up_ - u, d_rem = n_down_ - d;
  if (u_rem < 0 || d_rem < 0) return false;
  for (std::size_t i = from; i < current_.size(); ++i) {
    if (d_rem > 0 && u <= heights_[static_cast<std::size_t>(d)]) {
      current_[i] = 'D';
      ++d;
      --d_rem;
    } else if (u_rem > 0) {
      current_[i] = 'U';
      ++u;
      --u_rem;
    } else {
      return false;
    }
  }
  // A greedy fill never overshoots the ceiling, but it can strand U steps
  // only when the prefix was invalid; the checks above cover that.
  return u_rem == 0 && d_rem == 0;
}

std::optional<lattice_path> paths_below::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_.assign(static_cast<std::size_t>(n_up_ + n_down_), 'D');
    if (!complete_minimally(0)) {
      done_ = true;
      return std::nullopt;
    }
    return lattice_path{current_};
  }
  // Successor: flip the right-most D to U such that a valid completion of
  // the remaining positions exists.
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] != 'D') continue;
    current_[i] = 'U';
    if (complete_minimally(i + 1)) return lattice_path{current_};
    current_[i] = 'D';
  }
  done_ = true;
  return std::nullopt;
}

std::vector<lattice_path> paths_below_all(const lattice_path& ceiling,
                                          std::int64_t cap) {
  paths_below en(ceiling, cap);
  std::vector<lattice_path> r;
  while (auto p = en.next()) r.push_back(*p);
  return r;
}

path_family path_family::one_b(int b, int n) {
  if (b < 1 || n < 0) fail(errc::invalid_input, "one_b: need b >= 1, n >= 0");
  path_family f;
  f.k = kind::one_b;
  f.param = b;
  f.n = n;
  for (int i = 0; i < n; ++i)
    f.ceiling.word += "U" + std::string(static_cast<std::size_t>(b), 'D');
  return f;
}

path_family path_family::a_one(int a, int n) {
  if (a < 1 || n < 0) fail(errc::invalid_input, "a_one: need a >= 1, n >= 0");
  path_family f;
  f.k = kind::a_one;
  f.param = a;
  f.n = n;
  for (int i = 0; i < n; ++i)
    f.ceiling.word += std::string(static_cast<std::size_t>(a), 'U') + "D";
  return f;
}

path_family path_family::general(lattice_path ceiling) {
  if (!ceiling.word.empty() &&
      (ceiling.word.front() != 'U' || ceiling.word.back() != 'D'))
    fail(errc::bad_ceiling, "general: ceiling must start U and end D");
  path_family f;
  f.k = kind::general;
  f.ceiling = std::move(ceiling);
  return f;
}

step_sequence path_to_steps(const lattice_path& mu, int k) {
  const int n = mu.ups();
  if (mu.downs() != k * n)
    fail(errc::not_generalized_dyck, "path_to_steps: endpoint is not (kn, n)");
  if (!is_below(mu, path_family::one_b(k, n).ceiling))
    fail(errc::not_generalized_dyck,
         "path_to_steps: path is not below (U D^k)^n");
  step_sequence s;
  int x = 0;
  for (char c : mu.word) {
    if (c == 'U')
      s.m.push_back(k * n - x);
    else
      ++x;
  }
  s.m.push_back(0);
  return s;
}

lattice_path path_from_steps(const step_sequence& s, int k) {
  const int n = static_cast<int>(s.m.size()) - 1;
  if (n < 0 || s.m.back() != 0)
    fail(errc::invalid_step_sequence, "path_from_steps: need trailing 0");
  for (int i = 0; i < n; ++i) {
    if (s.m[i] < s.m[i + 1])
      fail(errc::invalid_step_sequence,
           "path_from_steps: entries must be weakly decreasing");
    if (s.m[i] > k * (n - i))
      fail(errc::invalid_step_sequence,
           "path_from_steps: m_i exceeds k(n+1-i)");
  }
  lattice_path mu;
  int x = 0;
  for (int i = 0; i < n; ++i) {
    int alpha = k * n - s.m[i];
    mu.word += std::string(static_cast<std::size_t>(alpha - x), 'D');
    mu.word += 'U';
    x = alpha;
  }
  mu.word += std::string(static_cast<std::size_t>(k * n - x), 'D');
  return mu;
}

std::vector<int> a_sequence(const lattice_path& mu0) {
  if (!mu0.word.empty() && (mu0.word.front() != 'U' || mu0.word.back() != 'D'))
    fail(errc::bad_ceiling, "a_sequence: word must start U and end D");
  const int r = mu0.ups();
  std::vector<int> a(static_cast<std::size_t>(r) + 1, 0);
  int h = 0;
  for (char c : mu0.word) {
    if (c == 'U')
      ++h;
    else
      ++a[static_cast<std::size_t>(r - h)];  // a_i counts D steps at height r+1-i
  }
  a[r] = 1;
  return a;
}

std::vector<int> b_sequence(const lattice_path& mu) {
  std::vector<int> b;
  int x = 0;
  for (char c : mu.word) {
    if (c == 'U')
      b.push_back(x);
    else
      ++x;
  }
  return b;
}

}  // namespace pathheaps
