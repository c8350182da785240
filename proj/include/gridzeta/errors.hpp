#ifndef GRIDZETA_ERRORS_HPP
#define GRIDZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gridzeta
{

/// Base class of every error raised by the library.
class error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation.
class domain_error : public error
{
    public:
        using error::error;
};

/// The argument sits on (or numerically at) a pole.
class pole_error : public domain_error
{
    public:
        using domain_error::domain_error;
};

/// The argument sits on a branch cut or branch point and no sheet was chosen.
class branch_error : public domain_error
{
    public:
        using domain_error::domain_error;
};

/// A numerical result could not be resolved to the requested accuracy.
class precision_error : public error
{
    public:
        using error::error;
};

class iteration_limit_error : public precision_error
{
    public:
        using precision_error::precision_error;
};

/// An internal consistency check failed (e.g. a count that must be an integer is not).
class invariant_error : public error
{
    public:
        using error::error;
};

}

#endif
