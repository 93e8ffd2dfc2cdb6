class Dispatcher
{
    static string Label(int code)
    {
        switch (code)
        {
            case 0: return "idle";
            case 1: return "busy";
            case 2: return "down";
            default: break;
        }
        return "unknown";
    }
}
