#include "dst/corpus.hpp"

#include <string>

#include "dst/error.hpp"

namespace dst
{

namespace detail
{
extern CorpusEntry const corpus_entries[];
extern std::size_t const corpus_entry_count;
} // namespace detail

std::span<CorpusEntry const> corpus()
{
  return {detail::corpus_entries, detail::corpus_entry_count};
}

std::optional<CorpusEntry> find_corpus_entry(std::string_view name)
{
  for (auto const &entry : corpus())
    if (entry.name == name)
      return entry;
  return std::nullopt;
}

PermGroup corpus_group(std::string_view name)
{
  auto entry = find_corpus_entry(name);
  if (!entry)
    throw Error(ErrorKind::MalformedInput,
                "no built-in group named \"" + std::string(name) + "\"");
  return load_group(entry->text);
}

} // namespace dst
