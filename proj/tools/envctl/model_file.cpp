#include "model_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "condenv/error.hpp"

namespace envctl {

using condenv::Error;
using condenv::ErrorCode;
using condenv::Event;

bool operator==(const TailLine& a, const TailLine& b) {
  const auto& x = a.spec;
  const auto& y = b.spec;
  return a.profile == b.profile && a.columns == b.columns && x.exceptions == y.exceptions && x.liminf == y.liminf &&
         x.limsup == y.limsup && x.inf_value == y.inf_value && x.sup_value == y.sup_value &&
         x.inf_attained == y.inf_attained && x.sup_attained == y.sup_attained;
}

bool operator==(const ModelFile& a, const ModelFile& b) {
  auto same_profiles = [](const auto& p, const auto& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k].name != q[k].name || p[k].modulus != q[k].modulus || p[k].residue != q[k].residue) return false;
    return true;
  };
  auto same_named = [](const auto& p, const auto& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k].name != q[k].name || p[k].index != q[k].index || p[k].sigma != q[k].sigma || p[k].mass != q[k].mass)
        return false;
    return true;
  };
  return a.n_conditioning == b.n_conditioning && a.n_observable == b.n_observable && a.excluded == b.excluded &&
         a.blocks == b.blocks && a.prior == b.prior && a.model == b.model && a.assessments == b.assessments &&
         a.events == b.events && a.queries == b.queries && a.has_profiles == b.has_profiles &&
         a.profile_observable == b.profile_observable && same_profiles(a.profiles, b.profiles) &&
         same_named(a.named, b.named) && a.cells == b.cells && a.tails == b.tails &&
         a.capacity_ground == b.capacity_ground && a.capacity == b.capacity && a.integrands == b.integrands;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  ModelFile run() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      auto hash = raw.find('#');
      std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') fail("unterminated section header");
        section_ = trim(s.substr(1, s.size() - 2));
        static const std::vector<std::string> known = {"space",  "prior",   "model",    "assessments", "events",
                                                       "queries", "profiles", "capacity", "integrands"};
        if (std::find(known.begin(), known.end(), section_) == known.end()) fail("unknown section [" + section_ + "]");
        continue;
      }
      if (section_.empty()) fail("content before the first section");
      line(s);
    }
    return m_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, source_ + ":" + std::to_string(line_) + ": " + msg);
  }

  Rational rational(std::string_view s) const {
    try {
      return condenv::parse_rational(s);
    } catch (const Error& e) {
      fail("not an exact rational: '" + std::string(s) + "'");
    }
  }

  std::vector<Rational> rationals(std::string_view s) const {
    std::vector<Rational> out;
    for (const auto& w : words(s)) out.push_back(rational(w));
    return out;
  }

  std::size_t count(std::string_view s) const {
    const std::string t = trim(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("expected a nonnegative integer, got '" + t + "'");
    return static_cast<std::size_t>(std::stoull(t));
  }

  std::pair<std::string, std::string> key_value(const std::string& s, bool last = false) const {
    auto eq = last ? s.rfind('=') : s.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
  }

  void line(const std::string& s) {
    if (section_ == "space") return space(s);
    if (section_ == "prior") return prior(s);
    if (section_ == "model") return model(s);
    if (section_ == "assessments") return assessment(s);
    if (section_ == "events") return event(s);
    if (section_ == "queries") return query(s);
    if (section_ == "profiles") return profiles(s);
    if (section_ == "capacity") return capacity(s);
    if (section_ == "integrands") return integrand(s);
  }

  void space(const std::string& s) {
    auto [k, v] = key_value(s);
    if (k == "conditioning") {
      m_.n_conditioning = count(v);
    } else if (k == "observable") {
      m_.n_observable = count(v);
    } else if (k == "exclude") {
      for (const auto& item : split(v, ',')) {
        auto parts = split(item, ':');
        if (parts.size() != 2) fail("exclusions are written i:j");
        m_.excluded.emplace_back(count(parts[0]), count(parts[1]));
      }
    } else {
      fail("unknown key '" + k + "' in [space]");
    }
  }

  void prior(const std::string& s) {
    auto [k, v] = key_value(s);
    if (k == "mass") {
      m_.prior = rationals(v);
    } else if (k == "blocks") {
      for (const auto& item : split(v, '|')) {
        std::vector<std::size_t> rows;
        for (const auto& w : words(item)) rows.push_back(count(w));
        if (rows.empty()) fail("empty block");
        m_.blocks.push_back(rows);
      }
    } else {
      fail("unknown key '" + k + "' in [prior]");
    }
  }

  void model(const std::string& s) {
    auto [k, v] = key_value(s);
    if (k.size() < 2 || k[0] != 'H') fail("model rows are written H<i> = values");
    const std::size_t i = count(k.substr(1));
    if (i != m_.model.size() + 1) fail("model rows must appear in order H1, H2, ...");
    m_.model.push_back(rationals(v));
  }

  void assessment(const std::string& s) {
    auto [lhs, v] = key_value(s, true);
    auto bar = lhs.find('|');
    if (bar == std::string::npos) fail("assessments are written F | K = value");
    m_.assessments.push_back({trim(lhs.substr(0, bar)), trim(lhs.substr(bar + 1)), rational(v)});
  }

  void event(const std::string& s) {
    auto [k, v] = key_value(s);
    if (k.empty() || v.empty()) fail("events are written name = expression");
    m_.events.emplace_back(k, v);
  }

  void query(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos)
      m_.queries.push_back({trim(s), "Omega"});
    else
      m_.queries.push_back({trim(s.substr(0, bar)), trim(s.substr(bar + 1))});
  }

  void profiles(const std::string& s) {
    m_.has_profiles = true;
    auto [k, v] = key_value(s);
    auto head = words(k);
    if (head.size() == 1 && head[0] == "observable") {
      m_.profile_observable = count(v);
    } else if (head.size() == 2 && head[0] == "profile") {
      auto w = words(v);
      if (w.size() != 2) fail("profiles are written: profile name = modulus residue");
      m_.profiles.push_back({head[1], count(w[0]), count(w[1])});
    } else if (head.size() == 2 && head[0] == "named") {
      auto parts = split(v, ':');
      if (parts.size() != 3) fail("named indices are written: named name = index : mass : sigma row");
      m_.named.push_back({head[1], count(parts[0]), rationals(parts[2]), rational(parts[1])});
    } else if (head.size() == 2 && head[0] == "cell") {
      auto parts = split(v, ':');
      if (parts.size() != 2) fail("cells are written: cell name = weight : profiles");
      m_.cells.push_back({head[1], rational(parts[0]), words(parts[1])});
    } else if (head.size() == 3 && head[0] == "tail") {
      m_.tails.push_back({head[1], head[2], tail(v)});
    } else {
      fail("unknown entry '" + k + "' in [profiles]");
    }
  }

  condenv::TailSpec tail(const std::string& v) const {
    condenv::TailSpec t;
    bool seen[4] = {false, false, false, false};
    for (const auto& item : split(v, ',')) {
      auto w = words(item);
      if (w.empty()) fail("empty tail item");
      const std::string& key = w[0];
      auto one = [&](Rational& dst, int slot) {
        if (w.size() != 2) fail("'" + key + "' takes one value");
        dst = rational(w[1]);
        seen[slot] = true;
      };
      if (key == "liminf") one(t.liminf, 0);
      else if (key == "limsup") one(t.limsup, 1);
      else if (key == "inf") one(t.inf_value, 2);
      else if (key == "sup") one(t.sup_value, 3);
      else if (key == "inf_open" && w.size() == 1) t.inf_attained = false;
      else if (key == "sup_open" && w.size() == 1) t.sup_attained = false;
      else if (key == "exceptions") {
        for (std::size_t q = 1; q < w.size(); ++q) {
          auto eq = w[q].find('=');
          if (eq == std::string::npos) fail("exceptions are written index=value");
          t.exceptions[count(w[q].substr(0, eq))] = rational(w[q].substr(eq + 1));
        }
      } else {
        fail("unknown tail item '" + key + "'");
      }
    }
    if (!seen[0] || !seen[1]) fail("tails need liminf and limsup");
    if (!seen[2]) t.inf_value = t.liminf;
    if (!seen[3]) t.sup_value = t.limsup;
    return t;
  }

  void capacity(const std::string& s) {
    auto [k, v] = key_value(s);
    if (k == "ground") {
      m_.capacity_ground = words(v);
      if (m_.capacity_ground.empty()) fail("empty ground set");
    } else {
      m_.capacity.push_back({words(k), rational(v)});
    }
  }

  void integrand(const std::string& s) {
    auto [k, v] = key_value(s);
    m_.integrands.push_back({k, rationals(v)});
  }

  std::string_view text_;
  std::string source_;
  std::string section_;
  std::size_t line_ = 0;
  ModelFile m_;
};

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? " " : "") + condenv::to_string(xs[k]);
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? " " : "") + xs[k];
  return out;
}

}  // namespace

ModelFile parse_model(std::string_view text, const std::string& source) { return Parser(text, source).run(); }

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), path);
}

std::string serialize(const ModelFile& m) {
  using condenv::to_string;
  std::ostringstream os;
  if (m.finite()) {
    os << "[space]\nconditioning = " << m.n_conditioning << "\nobservable = " << m.n_observable << "\n";
    if (!m.excluded.empty()) {
      os << "exclude = ";
      for (std::size_t k = 0; k < m.excluded.size(); ++k)
        os << (k ? ", " : "") << m.excluded[k].first << ":" << m.excluded[k].second;
      os << "\n";
    }
    os << "\n[prior]\nmass = " << join(m.prior) << "\n";
    if (!m.blocks.empty()) {
      os << "blocks = ";
      for (std::size_t b = 0; b < m.blocks.size(); ++b) {
        os << (b ? " | " : "");
        for (std::size_t k = 0; k < m.blocks[b].size(); ++k) os << (k ? " " : "") << m.blocks[b][k];
      }
      os << "\n";
    }
    os << "\n[model]\n";
    for (std::size_t i = 0; i < m.model.size(); ++i) os << "H" << i + 1 << " = " << join(m.model[i]) << "\n";
  }
  if (m.has_profiles) {
    os << "[profiles]\nobservable = " << m.profile_observable << "\n";
    for (const auto& p : m.profiles) os << "profile " << p.name << " = " << p.modulus << " " << p.residue << "\n";
    for (const auto& n : m.named)
      os << "named " << n.name << " = " << n.index << " : " << to_string(n.mass) << " : " << join(n.sigma) << "\n";
    for (const auto& c : m.cells) os << "cell " << c.name << " = " << to_string(c.weight) << " : " << join(c.profiles) << "\n";
    for (const auto& t : m.tails) {
      const auto& s = t.spec;
      os << "tail " << t.profile << " " << t.columns << " = liminf " << to_string(s.liminf) << ", limsup "
         << to_string(s.limsup) << ", inf " << to_string(s.inf_value) << ", sup " << to_string(s.sup_value);
      if (!s.inf_attained) os << ", inf_open";
      if (!s.sup_attained) os << ", sup_open";
      if (!s.exceptions.empty()) {
        os << ", exceptions";
        for (const auto& [i, v] : s.exceptions) os << " " << i << "=" << to_string(v);
      }
      os << "\n";
    }
  }
  if (m.is_capacity()) {
    os << "[capacity]\nground = " << join(m.capacity_ground) << "\n";
    for (const auto& c : m.capacity) os << join(c.subset) << " = " << to_string(c.value) << "\n";
  }
  if (!m.integrands.empty()) {
    os << "\n[integrands]\n";
    for (const auto& x : m.integrands) os << x.name << " = " << join(x.values) << "\n";
  }
  if (!m.assessments.empty()) {
    os << "\n[assessments]\n";
    for (const auto& a : m.assessments) os << a.f << " | " << a.k << " = " << to_string(a.value) << "\n";
  }
  if (!m.events.empty()) {
    os << "\n[events]\n";
    for (const auto& [name, expr] : m.events) os << name << " = " << expr << "\n";
  }
  if (!m.queries.empty()) {
    os << "\n[queries]\n";
    for (const auto& q : m.queries) os << q.f << " | " << q.k << "\n";
  }
  return os.str();
}

condenv::AtomSpace build_space(const ModelFile& m) {
  if (m.has_profiles) return build_profile_model(m).quotient();
  if (!m.finite()) throw Error(ErrorCode::InvalidInput, "model has no [space] section");
  std::vector<std::vector<bool>> compat(m.n_conditioning, std::vector<bool>(m.n_observable, true));
  for (auto [i, j] : m.excluded) {
    if (i == 0 || j == 0 || i > m.n_conditioning || j > m.n_observable)
      throw Error(ErrorCode::BadIndex, "exclusion " + std::to_string(i) + ":" + std::to_string(j) + " out of range");
    compat[i - 1][j - 1] = false;
  }
  return condenv::AtomSpace::build(compat);
}

condenv::Instance build_instance(const ModelFile& m) {
  auto space = build_space(m);
  std::vector<std::vector<std::size_t>> blocks;
  if (m.blocks.empty()) {
    for (std::size_t i = 0; i < m.n_conditioning; ++i) blocks.push_back({i});
  } else {
    for (const auto& b : m.blocks) {
      std::vector<std::size_t> rows;
      for (auto i : b) {
        if (i == 0) throw Error(ErrorCode::BadIndex, "block rows are 1-based");
        rows.push_back(i - 1);
      }
      blocks.push_back(rows);
    }
  }
  condenv::Prior prior(space, blocks, m.prior);
  return condenv::Instance::from_model(space, prior, condenv::StatisticalModel{m.model});
}

condenv::ProfileModel build_profile_model(const ModelFile& m) {
  if (!m.has_profiles) throw Error(ErrorCode::InvalidInput, "model has no [profiles] section");
  auto profile_index = [&](const std::string& name) {
    for (std::size_t p = 0; p < m.profiles.size(); ++p)
      if (m.profiles[p].name == name) return p;
    throw Error(ErrorCode::BadIndex, "unknown profile '" + name + "'");
  };
  std::vector<condenv::DiffuseCell> cells;
  for (const auto& c : m.cells) {
    condenv::DiffuseCell d{c.name, {}, c.weight};
    for (const auto& p : c.profiles) d.profiles.push_back(profile_index(p));
    cells.push_back(d);
  }
  condenv::ProfileModel model(m.profile_observable, m.profiles, m.named, cells);
  const auto columns_space = condenv::AtomSpace::full(1, m.profile_observable);
  for (const auto& t : m.tails) {
    const Event cols = condenv::event_of(columns_space, t.columns);
    model.set_tail(profile_index(t.profile), static_cast<condenv::Mask>(cols.mask()), t.spec);
  }
  return model;
}

condenv::Capacity build_capacity(const ModelFile& m) {
  const std::size_t n = m.capacity_ground.size();
  if (n > condenv::Capacity::kMaxGround) throw Error(ErrorCode::GroundTooLarge, "capacity ground too large");
  std::vector<std::optional<Rational>> values(std::size_t{1} << n);
  values.front() = Rational(0);
  values.back() = Rational(1);
  for (const auto& line : m.capacity) {
    condenv::Mask mask = 0;
    for (const auto& name : line.subset) {
      auto it = std::find(m.capacity_ground.begin(), m.capacity_ground.end(), name);
      if (it == m.capacity_ground.end()) throw Error(ErrorCode::BadIndex, "unknown element '" + name + "'");
      mask |= condenv::Mask{1} << (it - m.capacity_ground.begin());
    }
    values[mask] = line.value;
  }
  std::vector<Rational> out;
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (!values[s]) {
      std::string name;
      for (std::size_t k = 0; k < n; ++k)
        if (s >> k & 1U) name += (name.empty() ? "" : " ") + m.capacity_ground[k];
      throw Error(ErrorCode::InvalidInput, "capacity value missing for {" + name + "}");
    }
    out.push_back(*values[s]);
  }
  return condenv::Capacity(m.capacity_ground, std::move(out));
}

std::map<std::string, Event> build_aliases(const ModelFile& m, const condenv::AtomSpace& space) {
  std::map<std::string, Event> out;
  if (m.has_profiles) {
    for (std::size_t p = 0; p < m.profiles.size(); ++p) out[m.profiles[p].name] = space.row(p);
    for (std::size_t q = 0; q < m.named.size(); ++q) out[m.named[q].name] = space.row(m.profiles.size() + q);
    for (const auto& c : m.cells) {
      Event e = space.none();
      for (const auto& p : c.profiles) e |= out.at(p);
      out[c.name] = e;
    }
  }
  for (const auto& [name, expr] : m.events) out[name] = condenv::event_of(space, expr, out);
  return out;
}

}  // namespace envctl
