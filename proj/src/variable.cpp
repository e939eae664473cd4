#include "conformal/variable.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace conformal {

namespace {

struct Entry {
  std::string name;
  int rank;  // 0..4 reserved, 5 otherwise
};

struct Registry {
  std::mutex mu;
  std::deque<Entry> entries;  // deque: stable addresses, append-only
  std::map<std::string, uint32_t> index;

  Registry() {
    // Reserved names intern first so their ids are 0..4.
    const char *reserved[] = {"d", "l", "m", "n", "a"};
    for (int i = 0; i < 5; ++i) {
      entries.push_back({reserved[i], i});
      index.emplace(reserved[i], i);
    }
  }

  uint32_t intern(const std::string &name) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(entries.size());
    entries.push_back({name, 5});
    index.emplace(name, id);
    return id;
  }

  const Entry &entry(uint32_t id) {
    // Entries are never removed or moved; reads after intern need no lock.
    return entries[id];
  }
};

Registry &registry() {
  static Registry r;
  return r;
}

bool valid_name(const std::string &s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Variable::Variable(const std::string &name) {
  if (!valid_name(name))
    throw std::invalid_argument("Variable: invalid name '" + name + "'");
  id_ = registry().intern(name);
}

const std::string &Variable::name() const { return registry().entry(id_).name; }

int Variable::reserved_rank() const { return registry().entry(id_).rank; }

bool operator<(Variable a, Variable b) {
  if (a.id_ == b.id_) return false;
  const Entry &ea = registry().entry(a.id_);
  const Entry &eb = registry().entry(b.id_);
  if (ea.rank != eb.rank) return ea.rank < eb.rank;
  return ea.name < eb.name;
}

namespace vars {
Variable d() { return Variable("d"); }
Variable lambda() { return Variable("l"); }
Variable mu() { return Variable("m"); }
Variable nu() { return Variable("n"); }
Variable alpha() { return Variable("a"); }
}  // namespace vars

}  // namespace conformal
