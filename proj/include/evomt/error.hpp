#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evomt {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

// A data row in a lexicon or tag-lexicon file could not be parsed.
class MalformedRow : public Error {
 public:
  MalformedRow(const std::string& source, std::size_t line, const std::string& reason)
      : Error(source + ":" + std::to_string(line) + ": malformed row: " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus contains no word tokens") {}
};

class UnknownWord : public Error {
 public:
  explicit UnknownWord(const std::string& word) : Error("word not in model: " + word), word_(word) {}

  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class NoPairData : public Error {
 public:
  NoPairData(const std::string& x, const std::string& y)
      : Error("no co-occurrence data for pair {" + x + ", " + y + "}") {}
};

class FormatVersionMismatch : public Error {
 public:
  explicit FormatVersionMismatch(const std::string& header)
      : Error("unsupported model header: '" + header + "'") {}
};

class ChecksumMismatch : public Error {
 public:
  explicit ChecksumMismatch(const std::string& what) : Error("model checksum: " + what) {}
};

// The checksum matched but the body does not follow the model layout.
class MalformedModel : public Error {
 public:
  MalformedModel(std::size_t line, const std::string& reason)
      : Error("model line " + std::to_string(line) + ": " + reason) {}
};

// Grammar errors. Lines and columns are 1-based; columns count code points.
class GrammarError : public Error {
 public:
  using Error::Error;
};

class GrammarSyntaxError : public GrammarError {
 public:
  GrammarSyntaxError(std::size_t line, std::size_t column, const std::string& expected)
      : GrammarError("grammar syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": expected " + expected),
        line_(line),
        column_(column),
        expected_(expected) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class ForwardReference : public GrammarError {
 public:
  explicit ForwardReference(const std::string& name)
      : GrammarError("rule references undefined chunk label '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateRule : public GrammarError {
 public:
  explicit DuplicateRule(const std::string& name)
      : GrammarError("rule '" + name + "' defined twice"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace evomt
