#include "thue/episode.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace thue {

Episode::Episode(std::vector<std::vector<EventId>> sets)
    : sets_(std::move(sets)) {
  if (sets_.empty())
    throw std::invalid_argument("episode needs at least one set");
  for (const auto& set : sets_) {
    if (set.empty())
      throw std::invalid_argument("episode set may not be empty");
    for (std::size_t i = 1; i < set.size(); ++i)
      if (set[i] <= set[i - 1])
        throw std::invalid_argument(
            "episode set must be strictly ascending");
  }
}

std::size_t Episode::length() const {
  std::size_t n = 0;
  for (const auto& set : sets_)
    n += set.size();
  return n;
}

Episode Episode::simult_concat(EventId e) const {
  if (empty())
    throw std::invalid_argument("cannot extend an empty episode");
  if (e <= last_event())
    throw std::invalid_argument(
        "simultaneous extension must use an event ordered after the "
        "current last event");
  Episode out = *this;
  out.sets_.back().push_back(e);
  return out;
}

Episode Episode::serial_concat(EventId e) const {
  if (empty())
    throw std::invalid_argument("cannot extend an empty episode");
  Episode out = *this;
  out.sets_.push_back({e});
  return out;
}

Episode Episode::parent() const {
  if (empty() || length() == 1)
    return Episode();
  Episode out = *this;
  if (out.sets_.back().size() > 1)
    out.sets_.back().pop_back();
  else
    out.sets_.pop_back();
  return out;
}

int Episode::compare(const Episode& a, const Episode& b) {
  if (a.sets_.size() != b.sets_.size())
    return a.sets_.size() < b.sets_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.sets_.size(); ++i) {
    const auto& sa = a.sets_[i];
    const auto& sb = b.sets_[i];
    std::size_t n = std::min(sa.size(), sb.size());
    for (std::size_t j = 0; j < n; ++j)
      if (sa[j] != sb[j])
        return sa[j] < sb[j] ? -1 : 1;
    if (sa.size() != sb.size())
      return sa.size() < sb.size() ? -1 : 1;
  }
  return 0;
}

std::string Episode::format(const EventCatalog& catalog) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i)
      out << "->";
    out << '(';
    for (std::size_t j = 0; j < sets_[i].size(); ++j) {
      if (j)
        out << ' ';
      out << catalog.symbol(sets_[i][j]);
    }
    out << ')';
  }
  return out.str();
}

Episode Episode::parse(std::string_view text, const EventCatalog& catalog) {
  std::vector<std::vector<EventId>> sets;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (!sets.empty()) {
      if (text.compare(i, 2, "->") != 0)
        throw ParseError(0, "expected '->' between episode sets");
      i += 2;
      skip_ws();
    }
    if (i >= text.size() || text[i] != '(')
      throw ParseError(0, "expected '(' to open an episode set");
    ++i;
    std::vector<EventId> set;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw ParseError(0, "unterminated episode set");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ')' && text[j] != '(' &&
             !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i)
        throw ParseError(0, "malformed episode set");
      set.push_back(catalog.id_of(text.substr(i, j - i)));
      i = j;
    }
    if (set.empty())
      throw ParseError(0, "empty episode set");
    std::sort(set.begin(), set.end());
    for (std::size_t j = 1; j < set.size(); ++j)
      if (set[j] == set[j - 1])
        throw ParseError(0, "duplicate event in episode set");
    sets.push_back(std::move(set));
    skip_ws();
  }
  if (sets.empty())
    throw ParseError(0, "empty episode");
  return Episode(std::move(sets));
}

std::size_t EpisodeHash::operator()(const Episode& ep) const {
  // FNV-1a over the ids with a separator marker between sets.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& set : ep.sets()) {
    for (EventId e : set)
      mix(static_cast<std::uint64_t>(e) + 1);
    mix(0);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace thue
