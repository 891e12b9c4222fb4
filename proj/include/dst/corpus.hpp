#ifndef DST_CORPUS_HPP
#define DST_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "dst/group.hpp"

namespace dst
{

// Built-in group files (data/corpus), sorted by name.
struct CorpusEntry
{
  std::string_view name;
  std::string_view text;
};

std::span<CorpusEntry const> corpus();

std::optional<CorpusEntry> find_corpus_entry(std::string_view name);

// Throws Error(MalformedInput) for an unknown name.
PermGroup corpus_group(std::string_view name);

} // namespace dst

#endif // DST_CORPUS_HPP
