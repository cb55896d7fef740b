/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_ERRORS_HH
#define DOMIDX_GUARD_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domidx
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class InvalidEdge : public Error { public: using Error::Error; };
    class VertexOutOfRange : public Error { public: using Error::Error; };
    class LabelConflict : public Error { public: using Error::Error; };
    class DisconnectedGraph : public Error { public: using Error::Error; };
    class NotAPermutation : public Error { public: using Error::Error; };
    class VertexNotInSet : public Error { public: using Error::Error; };
    class NotDominating : public Error { public: using Error::Error; };
    class InvalidFamilyParams : public Error { public: using Error::Error; };
    class UnsupportedOperation : public Error { public: using Error::Error; };
    class UnknownSuite : public Error { public: using Error::Error; };
    class InternalInvariantViolation : public Error { public: using Error::Error; };

    /// Raised by every exponential routine when the graph order exceeds the configured cap.
    class ExactCapExceeded : public Error
    {
        public:
            ExactCapExceeded(std::size_t order, std::size_t cap) :
                Error("graph order " + std::to_string(order) + " exceeds exact cap " + std::to_string(cap))
            {
            }
    };

    class EnumerationCapExceeded : public Error { public: using Error::Error; };

    /// Base for everything the edge-list reader can reject.
    class ParseError : public Error
    {
        private:
            std::size_t _line;

        public:
            ParseError(std::size_t line, const std::string & what) :
                Error("line " + std::to_string(line) + ": " + what),
                _line(line)
            {
            }

            auto line() const -> std::size_t { return _line; }
    };

    class MalformedLine : public ParseError { public: using ParseError::ParseError; };
    class SelfLoop : public ParseError { public: using ParseError::ParseError; };
}

#endif
